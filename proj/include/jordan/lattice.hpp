#pragma once

// Subgroup closure and lattice enumeration for small finite groups whose
// elements are numbered 0..order()-1.
//
// A group type G must provide:
//   std::size_t   order() const;
//   std::uint32_t identity() const;
//   std::uint32_t mul(std::uint32_t, std::uint32_t) const;

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jordan/error.hpp"

namespace jordan {

/// Sorted list of element numbers; the canonical form of a subgroup.
using ElementList = std::vector<std::uint32_t>;

struct SubgroupEntry {
  ElementList elements;
  std::vector<std::uint32_t> generators;
};

inline constexpr std::size_t kDefaultElementBudget = 20736;

template <class G>
ElementList closure(const G& group, std::span<const std::uint32_t> gens,
                    std::size_t budget = kDefaultElementBudget) {
  std::vector<char> seen(group.order(), 0);
  ElementList found{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto cur = found[head];
    for (auto g : gens) {
      const auto prod = group.mul(cur, g);
      if (!seen[prod]) {
        seen[prod] = 1;
        found.push_back(prod);
        if (found.size() > budget)
          throw Error(ErrorCode::BudgetExceeded,
                      "closure exceeds " + std::to_string(budget) + " elements");
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

template <class G>
bool is_subgroup(const G& group, const ElementList& elems) {
  if (elems.empty() || !std::binary_search(elems.begin(), elems.end(), group.identity()))
    return false;
  // finite: closure under multiplication suffices
  for (auto a : elems)
    for (auto b : elems)
      if (!std::binary_search(elems.begin(), elems.end(), group.mul(a, b))) return false;
  return true;
}

template <class G>
bool elements_commute(const G& group, std::uint32_t a, std::uint32_t b) {
  return group.mul(a, b) == group.mul(b, a);
}

template <class G>
bool is_abelian(const G& group, std::span<const std::uint32_t> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!elements_commute(group, elems[i], elems[j])) return false;
  return true;
}

/// A small generating set, chosen greedily in increasing element order.
template <class G>
std::vector<std::uint32_t> greedy_generators(const G& group, const ElementList& elems) {
  std::vector<std::uint32_t> gens;
  ElementList span{group.identity()};
  for (auto e : elems) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = closure(group, gens, std::numeric_limits<std::size_t>::max());
    if (span.size() == elems.size()) break;
  }
  return gens;
}

struct LatticeOptions {
  std::size_t max_generators = std::numeric_limits<std::size_t>::max();
  bool abelian_only = false;
  std::size_t max_subgroups = 1u << 20;
};

/*
 * Breadth-first growth of the subgroup lattice: every subgroup generated by k
 * elements is the closure of a (k-1)-generated subgroup and one more element,
 * so depth k yields exactly the subgroups with at most k generators. With
 * abelian_only, extensions are restricted to elements commuting with the
 * current generators, which yields every abelian subgroup.
 *
 * Result is sorted by element list.
 */
template <class G>
std::vector<SubgroupEntry> enumerate_subgroups(const G& group, const LatticeOptions& opt = {}) {
  const std::size_t order = group.order();
  std::map<ElementList, std::vector<std::uint32_t>> known;
  std::vector<const ElementList*> frontier;

  auto [root, inserted] = known.emplace(ElementList{group.identity()}, std::vector<std::uint32_t>{});
  frontier.push_back(&root->first);

  std::vector<char> skip(order);
  for (std::size_t depth = 0; depth < opt.max_generators && !frontier.empty(); ++depth) {
    std::vector<const ElementList*> next;
    for (const ElementList* sub : frontier) {
      const auto gens = known.at(*sub);
      std::fill(skip.begin(), skip.end(), 0);
      for (auto e : *sub) skip[e] = 1;
      for (std::uint32_t g = 0; g < order; ++g) {
        if (skip[g]) continue;
        // <S, g s> = <S, g> for s in S
        for (auto s : *sub) skip[group.mul(g, s)] = 1;
        if (opt.abelian_only) {
          bool ok = true;
          for (auto h : gens) ok = ok && elements_commute(group, g, h);
          if (!ok) continue;
        }
        auto ext = gens;
        ext.push_back(g);
        auto elems = closure(group, ext, std::numeric_limits<std::size_t>::max());
        if (known.contains(elems)) continue;
        auto it = known.emplace(std::move(elems), std::move(ext)).first;
        next.push_back(&it->first);
        if (known.size() > opt.max_subgroups)
          throw Error(ErrorCode::BudgetExceeded,
                      "more than " + std::to_string(opt.max_subgroups) + " subgroups");
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupEntry> out;
  out.reserve(known.size());
  for (auto& [elems, gens] : known) out.push_back({elems, gens});
  return out;
}

}  // namespace jordan
