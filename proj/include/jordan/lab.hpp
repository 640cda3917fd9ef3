#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jordan/curve.hpp"
#include "jordan/lattice.hpp"
#include "jordan/theta.hpp"

namespace jordan {

enum class ClaimStatus { Verified, Failed, SkippedBudget };

std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::Verified;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
};

struct NonJordanRow {
  i64 n = 0;
  std::optional<Curve> curve;
  i64 group_order = 0;
  i64 certified_lower_bound = 0;
  std::optional<i64> min_abelian_index;
  ClaimStatus status = ClaimStatus::Verified;
};

/// One run of a lab command; `parameters` is enough to re-run it.
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<i64> delta;
  std::optional<i64> n, p, a, b;
  std::optional<i64> group_order;
  std::optional<i64> min_abelian_index;
  std::optional<i64> certified_lower_bound;
  std::optional<int> orientation_sigma;
  std::vector<Claim> claims;
  nlohmann::json witness;
  std::vector<Curve> curves;
  std::vector<NonJordanRow> rows;
  double wall_seconds = 0;

  /// No claim failed.
  bool ok() const;
};

nlohmann::json to_json(const RunReport& r);
std::string to_table(const RunReport& r);

struct LabOptions {
  std::size_t element_budget = kDefaultElementBudget;
  std::size_t max_group_order = 216;  // exhaustive min-index scans
  i64 level_budget = kDefaultThetaLevelBudget;
  std::uint64_t seed = 0;
  std::size_t samples = 100;  // pointwise checks per law
};

/// Pairing laws, isotropic index theorem, commutator identity, min index.
/// Throws BadDelta.
RunReport cmd_abstract(const std::vector<i64>& delta, const LabOptions& opt = {});

RunReport cmd_curve_search(i64 n, i64 p_max, std::size_t limit = 0);

/// Full theta-group suite on one curve. Throws NotAdmissible.
RunReport cmd_theta_verify(const Curve& curve, i64 n, const LabOptions& opt = {});

/// Rows n = 1..n_max; the certified column is n.
RunReport cmd_nonjordan_table(i64 n_max, i64 p_max, const LabOptions& opt = {});

}  // namespace jordan
