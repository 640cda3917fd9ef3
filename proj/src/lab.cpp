#include "jordan/lab.hpp"

#include <chrono>
#include <fmt/format.h>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "jordan/birgroup.hpp"
#include "jordan/error.hpp"
#include "jordan/finab.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/miller.hpp"

namespace jordan {

namespace {

using Clock = std::chrono::steady_clock;

// Runs one claim body. BudgetExceeded marks the claim skipped, any other
// library error marks it failed; the message lands in `detail`.
Claim run_claim(const std::string& id, const std::function<void(Claim&)>& body) {
  Claim c;
  c.id = id;
  try {
    body(c);
    if (c.failures > 0) c.status = ClaimStatus::Failed;
  } catch (const Error& e) {
    c.status = e.code() == ErrorCode::BudgetExceeded ? ClaimStatus::SkippedBudget
                                                      : ClaimStatus::Failed;
    c.detail = e.what();
  }
  return c;
}

void tally(Claim& c, bool ok) {
  ++c.checked;
  if (!ok) ++c.failures;
}

void skip(Claim& c, const std::string& why) {
  c.status = ClaimStatus::SkippedBudget;
  c.detail = why;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Multiplication table of the enumerated sublayer; positions located by point
// then function equality, independently of theta_to_heisenberg.
struct Table {
  std::vector<ThetaElement> elems;
  std::vector<std::uint32_t> mul;
  std::uint32_t identity = 0;

  std::uint32_t order() const { return static_cast<std::uint32_t>(elems.size()); }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return mul[a * order() + b]; }
};

std::optional<std::uint32_t> locate(const Table& t,
                                    const std::multimap<CurvePoint, std::uint32_t>& by_point,
                                    const ThetaElement& g) {
  const auto [lo, hi] = by_point.equal_range(g.x);
  for (auto it = lo; it != hi; ++it)
    if (fn_equal(t.elems[it->second].f, g.f)) return it->second;
  return std::nullopt;
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Failed: return "failed";
    case ClaimStatus::SkippedBudget: return "skipped-budget";
  }
  return "unknown";
}

bool RunReport::ok() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::Failed) return false;
  return true;
}

nlohmann::json to_json(const RunReport& r) {
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["delta"] = r.delta;
  j["n"] = opt(r.n);
  j["p"] = opt(r.p);
  j["a"] = opt(r.a);
  j["b"] = opt(r.b);
  j["group_order"] = opt(r.group_order);
  j["min_abelian_index"] = opt(r.min_abelian_index);
  j["certified_lower_bound"] = opt(r.certified_lower_bound);
  j["orientation_sigma"] = opt(r.orientation_sigma);
  j["claims"] = nlohmann::json::array();
  for (const auto& c : r.claims)
    j["claims"].push_back({{"id", c.id},
                           {"status", to_string(c.status)},
                           {"checked", c.checked},
                           {"failures", c.failures},
                           {"detail", c.detail}});
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (r.command == "curve-search") {
    j["curves"] = nlohmann::json::array();
    for (const auto& c : r.curves)
      j["curves"].push_back({{"p", c.p()}, {"a", c.a().value()}, {"b", c.b().value()}});
  }
  if (r.command == "nonjordan") {
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
      nlohmann::json jr{{"n", row.n},
                        {"group_order", row.group_order},
                        {"certified_lower_bound", row.certified_lower_bound},
                        {"min_abelian_index", opt(row.min_abelian_index)},
                        {"status", to_string(row.status)}};
      jr["curve"] = row.curve ? nlohmann::json{{"p", row.curve->p()},
                                               {"a", row.curve->a().value()},
                                               {"b", row.curve->b().value()}}
                              : nlohmann::json(nullptr);
      j["rows"].push_back(jr);
    }
  }
  j["ok"] = r.ok();
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string to_table(const RunReport& r) {
  std::ostringstream out;
  auto show = [](const std::optional<i64>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << r.command << "  " << r.parameters.dump() << "\n";
  if (r.group_order) out << "  group order            " << *r.group_order << "\n";
  if (r.certified_lower_bound || r.min_abelian_index)
    out << "  min abelian index      " << show(r.min_abelian_index) << "  (certified >= "
        << show(r.certified_lower_bound) << ")\n";
  if (r.orientation_sigma) out << "  orientation sigma      " << *r.orientation_sigma << "\n";
  if (r.command == "curve-search") {
    out << "  " << r.curves.size() << " curve(s)\n";
    for (const auto& c : r.curves) out << "    " << c.str() << "\n";
  }
  if (r.command == "nonjordan") {
    out << fmt::format("  {:>3}  {:<12} {:>8} {:>10} {:>9}  {}\n", "n", "curve", "#G", "bound",
                       "min", "status");
    for (const auto& row : r.rows)
      out << fmt::format("  {:>3}  {:<12} {:>8} {:>10} {:>9}  {}\n", row.n,
                         row.curve ? row.curve->str() : "-", row.group_order,
                         row.certified_lower_bound, show(row.min_abelian_index),
                         to_string(row.status));
  }
  for (const auto& c : r.claims) {
    out << fmt::format("  {:<32} {:<15} {:>9} checked", c.id, to_string(c.status), c.checked);
    if (c.failures) out << ", " << c.failures << " failed";
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << fmt::format("  {} in {:.3f} s\n", r.ok() ? "ok" : "FAILED", r.wall_seconds);
  return out.str();
}

RunReport cmd_abstract(const std::vector<i64>& delta, const LabOptions& opt) {
  const auto t0 = Clock::now();
  const FinAbGroup k(delta);
  const i64 big_n = k.order();
  RunReport r;
  r.command = "abstract";
  r.parameters = {{"delta", delta},
                  {"budget", opt.element_budget},
                  {"max_group_order", opt.max_group_order}};
  r.delta = delta;
  r.n = big_n;
  r.group_order = big_n * big_n * big_n;

  const HGroup h(k);
  const auto hn = static_cast<std::uint32_t>(h.order());
  const bool triples_fit = std::size_t{hn} * hn * hn <= opt.element_budget * 1024;

  r.claims.push_back(run_claim("pairing.bi_additive", [&](Claim& c) {
    if (!triples_fit) return skip(c, "#H_K^3 over budget");
    for (std::uint32_t a = 0; a < hn; ++a)
      for (std::uint32_t b = 0; b < hn; ++b)
        for (std::uint32_t x = 0; x < hn; ++x) {
          tally(c, h.pairing_exponent(h.mul(a, b), x) ==
                       mod_floor(h.pairing_exponent(a, x) + h.pairing_exponent(b, x), big_n));
          tally(c, h.pairing_exponent(x, h.mul(a, b)) ==
                       mod_floor(h.pairing_exponent(x, a) + h.pairing_exponent(x, b), big_n));
        }
  }));
  r.claims.push_back(run_claim("pairing.alternating", [&](Claim& c) {
    for (std::uint32_t a = 0; a < hn; ++a) {
      tally(c, h.pairing_exponent(a, a) == 0);
      for (std::uint32_t b = 0; b < hn; ++b)
        tally(c, mod_floor(h.pairing_exponent(a, b) + h.pairing_exponent(b, a), big_n) == 0);
    }
  }));
  r.claims.push_back(run_claim("pairing.nondegenerate", [&](Claim& c) {
    for (std::uint32_t a = 1; a < hn; ++a) {
      bool witness = false;
      for (std::uint32_t b = 0; b < hn && !witness; ++b) witness = h.pairing_exponent(a, b) != 0;
      tally(c, witness);
    }
  }));
  r.claims.push_back(run_claim("isotropic.index_divisible", [&](Claim& c) {
    for (const auto& e : all_subgroups(k, opt.element_budget)) {
      if (!is_isotropic(e)) continue;
      const i64 size = static_cast<i64>(e.size());
      const i64 index = static_cast<i64>(hn) / size;
      tally(c, big_n % size == 0 && index % big_n == 0);
    }
  }));
  r.claims.push_back(run_claim("heisenberg.commutator_identity", [&](Claim& c) {
    const HeisGroup g(k);
    const auto gn = g.order();
    if (gn * gn > opt.element_budget * 1024) return skip(c, "#G^2 over budget");
    for (std::uint32_t a = 0; a < gn; ++a)
      for (std::uint32_t b = 0; b < gn; ++b) {
        const auto x = g.element(a), y = g.element(b);
        tally(c, heis_commutator(x, y) == pairing_e(heis_pi(x), heis_pi(y)));
      }
  }));
  r.claims.push_back(run_claim("heisenberg.min_abelian_index", [&](Claim& c) {
    const auto rep = min_abelian_index(k, {opt.max_group_order, 0});
    r.certified_lower_bound = rep.certified_lower_bound;
    r.min_abelian_index = rep.min_abelian_index;
    r.witness = to_json(rep);
    if (!rep.min_abelian_index) return skip(c, "group over exhaustive-order budget");
    tally(c, *rep.min_abelian_index == big_n && rep.certified_lower_bound == big_n);
  }));
  r.wall_seconds = seconds_since(t0);
  return r;
}

RunReport cmd_curve_search(i64 n, i64 p_max, std::size_t limit) {
  const auto t0 = Clock::now();
  RunReport r;
  r.command = "curve-search";
  r.parameters = {{"n", n}, {"p_max", p_max}, {"limit", limit}};
  r.n = n;
  r.curves = curve_search(n, p_max, limit);
  r.claims.push_back(run_claim("curve_search.full_torsion", [&](Claim& c) {
    for (const auto& curve : r.curves)
      tally(c, static_cast<i64>(torsion_subgroup(curve, n).size()) == n * n &&
                   (curve.p() - 1) % n == 0);
  }));
  r.wall_seconds = seconds_since(t0);
  return r;
}

RunReport cmd_theta_verify(const Curve& curve, i64 n, const LabOptions& opt) {
  const auto t0 = Clock::now();
  RunReport r;
  r.command = "theta-verify";
  r.parameters = {{"p", curve.p()},
                  {"a", curve.a().value()},
                  {"b", curve.b().value()},
                  {"n", n},
                  {"seed", opt.seed},
                  {"level_budget", opt.level_budget}};
  r.n = n;
  r.p = curve.p();
  r.a = curve.a().value();
  r.b = curve.b().value();
  r.delta = {n};
  r.group_order = n * n * n;

  const auto hl = h_of_level(curve, n);
  r.claims.push_back(run_claim("theta.h_of_level", [&](Claim& c) {
    tally(c, static_cast<i64>(hl.elements.size()) == n * n);
    tally(c, hl.base == std::vector{CurvePoint::at_infinity()});
    tally(c, hl.elements == torsion_subgroup(curve, n));
  }));

  const auto ls = level_structure(curve, n);
  r.orientation_sigma = orientation_sigma(ls);
  r.witness = {{"basis", {ls.p.str(), ls.q.str()}},
               {"lift_scales", {ls.lift_p.f.scale().value(), ls.lift_q.f.scale().value()}},
               {"commutator", ls.commutator.value()}};

  if (n > opt.level_budget) {
    for (const char* id : {"theta.group_axioms", "theta.commutator_vs_weil",
                           "theta.heisenberg_isomorphism", "birgroup.embed_homomorphism",
                           "birgroup.embed_injective", "birgroup.pointwise_semantics"})
      r.claims.push_back(run_claim(id, [&](Claim& c) { skip(c, "level over budget"); }));
    r.wall_seconds = seconds_since(t0);
    return r;
  }

  Table t;
  t.elems = theta_enumerate_mu(ls, opt.level_budget);
  const auto m = t.order();
  std::multimap<CurvePoint, std::uint32_t> by_point;
  for (std::uint32_t i = 0; i < m; ++i) by_point.emplace(t.elems[i].x, i);

  r.claims.push_back(run_claim("theta.group_axioms", [&](Claim& c) {
    t.mul.assign(std::size_t{m} * m, 0);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b) {
        const auto pos = locate(t, by_point, theta_mul(t.elems[a], t.elems[b]));
        tally(c, pos.has_value());
        if (pos) t.mul[a * m + b] = *pos;
      }
    if (c.failures) return;
    const auto id = locate(t, by_point, theta_identity(curve, n));
    tally(c, id.has_value());
    if (!id) return;
    t.identity = *id;
    for (std::uint32_t a = 0; a < m; ++a) {
      tally(c, t.at(t.identity, a) == a && t.at(a, t.identity) == a);
      const auto inv = locate(t, by_point, theta_inv(t.elems[a]));
      tally(c, inv && t.at(a, *inv) == t.identity && t.at(*inv, a) == t.identity);
      for (std::uint32_t b = 0; b < m; ++b)
        for (std::uint32_t x = 0; x < m; ++x) tally(c, t.at(t.at(a, b), x) == t.at(a, t.at(b, x)));
    }
  }));
  const bool have_table = r.claims.back().status == ClaimStatus::Verified;

  r.claims.push_back(run_claim("theta.commutator_vs_weil", [&](Claim& c) {
    std::map<std::pair<CurvePoint, CurvePoint>, Fp> weil;
    for (const auto& x : ls.torsion)
      for (const auto& y : ls.torsion)
        weil.emplace(std::pair(x, y), weil_pairing_value(curve, x, y, n, opt.seed));
    for (const auto& g : t.elems)
      for (const auto& h : t.elems) {
        const Fp e = weil.at({g.x, h.x});
        tally(c, theta_commutator(g, h) == (*r.orientation_sigma == 1 ? e : e.inverse()));
      }
  }));

  r.claims.push_back(run_claim("theta.heisenberg_isomorphism", [&](Claim& c) {
    if (!have_table) return skip(c, "no multiplication table");
    const HeisGroup g{FinAbGroup({n})};
    std::vector<std::uint32_t> image(m);
    std::vector<bool> hit(m, false);
    for (std::uint32_t a = 0; a < m; ++a) {
      image[a] = g.index_of(theta_to_heisenberg(t.elems[a], ls));
      tally(c, image[a] < m && !hit[image[a]]);
      if (image[a] < m) hit[image[a]] = true;
    }
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b) tally(c, image[t.at(a, b)] == g.mul(image[a], image[b]));
  }));

  r.claims.push_back(run_claim("birgroup.embed_homomorphism", [&](Claim& c) {
    for (const auto& g : t.elems)
      for (const auto& h : t.elems)
        tally(c, bir_equal(theta_embed(theta_mul(g, h)), bir_compose(theta_embed(h), theta_embed(g))));
  }));

  r.claims.push_back(run_claim("birgroup.embed_injective", [&](Claim& c) {
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = a + 1; b < m; ++b)
        tally(c, !bir_equal(theta_embed(t.elems[a]), theta_embed(t.elems[b])));
  }));

  r.claims.push_back(run_claim("birgroup.pointwise_semantics", [&](Claim& c) {
    const auto pts = enumerate_points(curve);
    std::mt19937_64 rng(opt.seed);
    std::size_t compose = 0, inverse = 0;
    for (std::size_t trial = 0; trial < 100 * opt.samples && (compose < opt.samples ||
                                                               inverse < opt.samples);
         ++trial) {
      const auto a = theta_embed(t.elems[rng() % m]);
      const auto b = theta_embed(t.elems[rng() % m]);
      const SamplePoint s{pts[rng() % pts.size()], curve.field(1 + static_cast<i64>(rng() % (curve.p() - 1)))};
      const auto first = bir_apply(a, s);
      if (first) {
        if (const auto second = bir_apply(b, *first)) {
          const auto direct = bir_apply(bir_compose(b, a), s);
          tally(c, direct && *direct == *second);
          ++compose;
        }
        if (const auto back = bir_apply(bir_inverse(a), *first)) {
          tally(c, *back == s);
          ++inverse;
        }
      }
    }
    if (compose < opt.samples || inverse < opt.samples) {
      ++c.failures;
      c.detail = "too few defined samples";
    }
  }));

  r.claims.push_back(run_claim("theta.min_abelian_index", [&](Claim& c) {
    const auto rep = min_abelian_index(FinAbGroup({n}), {opt.max_group_order, 0});
    r.certified_lower_bound = rep.certified_lower_bound;
    r.min_abelian_index = rep.min_abelian_index;
    if (!rep.min_abelian_index) return skip(c, "group over exhaustive-order budget");
    tally(c, *rep.min_abelian_index == n);
  }));

  r.wall_seconds = seconds_since(t0);
  return r;
}

RunReport cmd_nonjordan_table(i64 n_max, i64 p_max, const LabOptions& opt) {
  const auto t0 = Clock::now();
  RunReport r;
  r.command = "nonjordan";
  r.parameters = {{"n_max", n_max},
                  {"p_max", p_max},
                  {"level_budget", opt.level_budget},
                  {"max_group_order", opt.max_group_order}};
  for (i64 n = 1; n <= n_max; ++n) {
    NonJordanRow row;
    row.n = n;
    row.group_order = n * n * n;
    const auto curves =
        n <= opt.level_budget ? theta_curve_search(n, p_max, 1) : curve_search(n, p_max, 1);
    if (!curves.empty()) row.curve = curves.front();
    const auto rep = min_abelian_index(FinAbGroup({n}), {opt.max_group_order, 0});
    row.certified_lower_bound = rep.certified_lower_bound;
    row.min_abelian_index = rep.min_abelian_index;
    if (!row.curve || (row.min_abelian_index && *row.min_abelian_index != n))
      row.status = ClaimStatus::Failed;
    else if (!row.min_abelian_index || n > opt.level_budget)
      row.status = ClaimStatus::SkippedBudget;
    r.rows.push_back(row);
    r.claims.push_back(run_claim("nonjordan.row." + std::to_string(n), [&](Claim& c) {
      tally(c, row.curve.has_value());
      tally(c, row.certified_lower_bound == n);
      if (row.min_abelian_index) tally(c, *row.min_abelian_index == n);
      // the witness group itself: the mu_n sublayer of the theta group, closed under products
      if (row.curve && n <= opt.level_budget) {
        const auto elems = theta_enumerate_mu(level_structure(*row.curve, n), opt.level_budget);
        tally(c, static_cast<i64>(elems.size()) == row.group_order);
      }
      if (!row.curve) c.detail = "no admissible curve below p_max";
      else if (!row.min_abelian_index) skip(c, "exact minimum over budget");
    }));
  }
  r.claims.push_back(run_claim("nonjordan.bounds_increasing", [&](Claim& c) {
    for (std::size_t i = 1; i < r.rows.size(); ++i)
      tally(c, r.rows[i].certified_lower_bound > r.rows[i - 1].certified_lower_bound);
  }));
  r.wall_seconds = seconds_since(t0);
  return r;
}

}  // namespace jordan
