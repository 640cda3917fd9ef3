#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jordan/finab.hpp"

namespace jordan {

/// (a, x, l) in G^1_K = mu_N x K x K^.
struct HeisElement {
  RootOfUnity a;
  KElement x;
  Character ell;

  static HeisElement identity(const FinAbGroup& k);
  /// Central element (zeta_N^e, 0, 1).
  static HeisElement central(const FinAbGroup& k, i64 exponent);

  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

/// (a, x, l)(a', x', l') = (a a' l'(x), x + x', l l'). Throws GroupMismatch.
HeisElement heis_mul(const HeisElement& g, const HeisElement& h);
HeisElement heis_inv(const HeisElement& g);
/// Scalar part of g h g^-1 h^-1.
RootOfUnity heis_commutator(const HeisElement& g, const HeisElement& h);
HPoint heis_pi(const HeisElement& g);

/*
 * G^1_K numbered as  a * N^2 + x * N + l  (all parts by index), so that
 * element-list order is lexicographic in (a, x, l).
 */
class HeisGroup {
 public:
  explicit HeisGroup(FinAbGroup k);

  const FinAbGroup& k() const { return k_; }
  std::size_t order() const { return static_cast<std::size_t>(n_ * n_ * n_); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t index_of(const HeisElement& g) const;
  HeisElement element(std::uint32_t idx) const;
  /// Index of pi(g) in HGroup numbering.
  std::uint32_t project(std::uint32_t idx) const { return idx % static_cast<std::uint32_t>(n_ * n_); }

 private:
  FinAbGroup k_;
  i64 n_;
};

struct IndexReport {
  std::vector<i64> delta;
  i64 n = 0;
  i64 group_order = 0;
  std::optional<i64> min_abelian_index;  // empty when over budget
  i64 certified_lower_bound = 0;
  std::vector<HeisElement> witness_generators;
  std::size_t witness_order = 0;
  std::size_t abelian_subgroups_scanned = 0;
};

nlohmann::json to_json(const HeisElement& g);
nlohmann::json to_json(const IndexReport& report);

struct MinIndexOptions {
  /// Largest #G^1_K = N^3 searched exhaustively; beyond it only the
  /// certified bound and the Lagrangian witness are reported.
  std::size_t max_group_order = 216;
  /// Generator bound for the abelian-subgroup scan; 0 picks 1 + 2 rank(delta).
  std::size_t max_generators = 0;
};

/*
 * Minimal index of an abelian subgroup of G^1_K. The certified lower bound is
 * N (an abelian subgroup projects to an isotropic subgroup of H_K). When the
 * group is too large to scan, the report falls back to the Lagrangian witness
 * mu_N x K x {1} and leaves min_abelian_index empty.
 */
IndexReport min_abelian_index(const FinAbGroup& k, const MinIndexOptions& opt = {});

/// mu_N x K x {1}: abelian, index N.
ElementList lagrangian_lift(const HeisGroup& g);

}  // namespace jordan
