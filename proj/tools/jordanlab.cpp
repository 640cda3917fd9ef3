// jordanlab: verification suites and the non-Jordan witness table.
// JSON record on stdout, human-readable table on stderr.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jordan/error.hpp"
#include "jordan/finab.hpp"
#include "jordan/lab.hpp"

namespace {

using namespace jordan;

struct Args {
  std::string delta = "2";
  i64 n = 2;
  std::optional<i64> p, a, b;
  i64 p_max = kDefaultPrimeBudget;
  i64 n_max = 4;
  std::size_t limit = 0;
  std::size_t budget = kDefaultElementBudget;
  std::size_t max_group_order = 216;
  i64 level_budget = kDefaultThetaLevelBudget;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string format = "json";
};

void emit(const RunReport& r, const std::string& format) {
  if (format == "json") std::cout << to_json(r).dump(2) << "\n";
  std::cerr << to_table(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg groups, theta groups and the non-Jordan witness"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", args.budget, "subgroup enumeration budget (elements)")
        ->capture_default_str();
    sub->add_option("--seed", args.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--format", args.format, "stdout format; the table always goes to stderr")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_option("--exhaustive-order", args.max_group_order,
                    "largest group order scanned exhaustively for the minimal index")
        ->capture_default_str();
  };

  auto* abstract = app.add_subcommand("abstract", "finite Heisenberg group suite for K(delta)");
  abstract->add_option("--delta", args.delta, "elementary divisors, e.g. 2,2")->capture_default_str();
  add_common(abstract);

  auto* search = app.add_subcommand("curve-search", "curves with full rational n-torsion");
  search->add_option("--n", args.n)->capture_default_str();
  search->add_option("--p-max", args.p_max)->capture_default_str();
  search->add_option("--limit", args.limit, "stop after this many curves (0 = all)")
      ->capture_default_str();
  add_common(search);

  auto* theta = app.add_subcommand("theta-verify", "theta group suite on y^2 = x^3 + a x + b");
  theta->add_option("--n", args.n)->capture_default_str();
  theta->add_option("--p", args.p, "prime; searched when p, a, b are all omitted");
  theta->add_option("--a", args.a);
  theta->add_option("--b", args.b);
  theta->add_option("--p-max", args.p_max, "search bound when no curve is given")
      ->capture_default_str();
  theta->add_option("--n-max", args.level_budget, "largest level enumerated exhaustively")
      ->capture_default_str();
  theta->add_option("--samples", args.samples, "pointwise samples per law")->capture_default_str();
  add_common(theta);

  auto* nonjordan = app.add_subcommand("nonjordan", "certified abelian-index bounds for n = 1..n_max");
  nonjordan->add_option("--n-max", args.n_max)->capture_default_str();
  nonjordan->add_option("--p-max", args.p_max)->capture_default_str();
  add_common(nonjordan);

  CLI11_PARSE(app, argc, argv);

  const LabOptions opt{args.budget, args.max_group_order, args.level_budget, args.seed, args.samples};
  try {
    RunReport report;
    if (*abstract) {
      report = cmd_abstract(FinAbGroup::parse(args.delta).delta(), opt);
    } else if (*search) {
      report = cmd_curve_search(args.n, args.p_max, args.limit);
    } else if (*theta) {
      std::optional<Curve> curve;
      if (args.p || args.a || args.b) {
        if (!(args.p && args.a && args.b))
          throw Error(ErrorCode::InvalidArgument, "--p, --a and --b go together");
        curve.emplace(*args.p, *args.a, *args.b);
      } else {
        const auto found = theta_curve_search(args.n, args.p_max, 1);
        if (found.empty())
          throw Error(ErrorCode::NotAdmissible, "no admissible curve with p <= " +
                                                    std::to_string(args.p_max));
        curve = found.front();
      }
      report = cmd_theta_verify(*curve, args.n, opt);
    } else {
      report = cmd_nonjordan_table(args.n_max, args.p_max, opt);
    }
    emit(report, args.format);
    return report.ok() ? 0 : 1;
  } catch (const Error& e) {
    if (args.format == "json")
      std::cout << nlohmann::json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2)
                << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
