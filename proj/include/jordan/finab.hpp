#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/exactscalars.hpp"
#include "jordan/lattice.hpp"

namespace jordan {

/*
 * K(delta) = Z/d_1 + ... + Z/d_r with d_{i+1} | d_i.
 *
 * Elements of K and of its character group are both coordinatized by residue
 * tuples; the character with coordinates c sends x to
 *   zeta_N ^ sum_i (N/d_i) c_i x_i,     N = #K.
 * Every element is also numbered by its mixed-radix index (first coordinate
 * most significant), so index order is lexicographic coordinate order.
 */
class FinAbGroup {
 public:
  FinAbGroup() : FinAbGroup(std::vector<i64>{}) {}
  explicit FinAbGroup(std::vector<i64> delta);

  /// Parses "d1,d2,...". Throws BadDelta.
  static FinAbGroup parse(std::string_view text);

  const std::vector<i64>& delta() const { return data_->delta; }
  std::size_t rank() const { return data_->delta.size(); }
  i64 order() const { return data_->order; }
  i64 exponent() const { return data_->delta.empty() ? 1 : data_->delta.front(); }

  i64 index_of(const std::vector<i64>& coords) const;
  std::vector<i64> coords_of(i64 index) const;

  i64 add_index(i64 a, i64 b) const;
  i64 neg_index(i64 a) const;
  /// Exponent of zeta_N in ell(x), by index.
  i64 char_exponent(i64 ell, i64 x) const;

  std::string str() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.data_ == b.data_ || a.data_->delta == b.data_->delta;
  }

 private:
  struct Data {
    std::vector<i64> delta;
    std::vector<i64> stride;
    i64 order = 1;
    std::vector<std::int32_t> char_table;  // order x order, empty when large
  };
  std::shared_ptr<const Data> data_;
};

struct KElement {
  FinAbGroup group;
  std::vector<i64> coords;

  static KElement zero(const FinAbGroup& g) { return {g, std::vector<i64>(g.rank(), 0)}; }
  static KElement from_index(const FinAbGroup& g, i64 idx) { return {g, g.coords_of(idx)}; }
  i64 index() const { return group.index_of(coords); }

  KElement operator+(const KElement& o) const;
  KElement operator-() const;
  friend bool operator==(const KElement&, const KElement&) = default;
};

/// Character of K in multiplicative notation (product = coordinate sum).
struct Character {
  FinAbGroup group;
  std::vector<i64> coords;

  static Character trivial(const FinAbGroup& g) { return {g, std::vector<i64>(g.rank(), 0)}; }
  static Character from_index(const FinAbGroup& g, i64 idx) { return {g, g.coords_of(idx)}; }
  i64 index() const { return group.index_of(coords); }

  Character operator*(const Character& o) const;
  Character inverse() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Throws GroupMismatch.
RootOfUnity char_eval(const Character& ell, const KElement& x);

struct HPoint {
  KElement x;
  Character ell;

  static HPoint zero(const FinAbGroup& g) { return {KElement::zero(g), Character::trivial(g)}; }
  static HPoint from_index(const FinAbGroup& g, i64 idx);
  i64 index() const;

  HPoint operator+(const HPoint& o) const;
  friend bool operator==(const HPoint&, const HPoint&) = default;
};

/// e((x,l),(x',l')) = l'(x) / l(x'), valued in mu_N.
RootOfUnity pairing_e(const HPoint& h1, const HPoint& h2);

/// H_K = K x K^ as a numbered abelian group, for lattice enumeration.
class HGroup {
 public:
  explicit HGroup(FinAbGroup k) : k_(std::move(k)) {}

  const FinAbGroup& k() const { return k_; }
  std::size_t order() const { return static_cast<std::size_t>(k_.order() * k_.order()); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  /// Exponent of zeta_N in e(a, b).
  i64 pairing_exponent(std::uint32_t a, std::uint32_t b) const;

  HPoint point(std::uint32_t idx) const { return HPoint::from_index(k_, idx); }

 private:
  FinAbGroup k_;
};

/// An enumerated subgroup of H_K.
struct HSubgroup {
  FinAbGroup group;
  ElementList elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const HPoint& h) const;
  std::vector<HPoint> points() const;
};

/// Closure of gens under addition. Throws BudgetExceeded when #H_K > budget,
/// GroupMismatch when generators live over different delta.
HSubgroup subgroup_span(const FinAbGroup& k, const std::vector<HPoint>& gens,
                        std::size_t budget = kDefaultElementBudget);

/// Throws NotASubgroup.
bool is_isotropic(const HSubgroup& e);

/// { h : e(h, s) = 1 for all s in E }. Throws NotASubgroup.
HSubgroup orthogonal_complement(const HSubgroup& e);

struct IsotropicWitness {
  std::vector<HPoint> generators;
  HSubgroup elements;
  HSubgroup complement;
  i64 index = 0;  // [H_K : E]
  i64 n = 0;      // N = #K
};

/// Certifies #E | N and N | [H_K : E]. Throws NotIsotropic.
IsotropicWitness isotropic_certificate(const HSubgroup& e);

/// Every subgroup of H_K. Throws BudgetExceeded when #H_K > budget.
std::vector<HSubgroup> all_subgroups(const FinAbGroup& k,
                                     std::size_t budget = kDefaultElementBudget);

}  // namespace jordan
