// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Usage: acceptance [path-to-jordanlab]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "../curve_oracles.hpp"
#include "../oracles.hpp"
#include "jordan/birgroup.hpp"
#include "jordan/error.hpp"
#include "jordan/finab.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/lab.hpp"
#include "jordan/miller.hpp"
#include "jordan/theta.hpp"

using namespace jordan;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << "first failure: " << what;
    ok = false;
  }
};

const std::vector<std::vector<i64>> kDeltas = {{2}, {3}, {4}, {2, 2}};

std::string delta_str(const std::vector<i64>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

oracle::Pt naive(const CurvePoint& u) {
  if (u.infinity) return std::nullopt;
  return std::pair(u.x, u.y);
}

void pairing_laws(Outcome& o) {
  std::size_t checks = 0;
  for (const auto& d : kDeltas) {
    const FinAbGroup k(d);
    const HGroup h(k);
    const auto n = static_cast<std::uint32_t>(h.order());
    std::vector<HPoint> pts;
    for (std::uint32_t i = 0; i < n; ++i) pts.push_back(h.point(i));
    for (std::uint32_t a = 0; a < n; ++a) {
      o.check(pairing_e(pts[a], pts[a]).is_one(), "alternating " + delta_str(d));
      bool witness = a == 0;
      for (std::uint32_t b = 0; b < n; ++b) {
        const auto e = pairing_e(pts[a], pts[b]);
        witness = witness || !e.is_one();
        o.check(e * pairing_e(pts[b], pts[a]) == RootOfUnity::one(k.order()), "skew " + delta_str(d));
        for (std::uint32_t c = 0; c < n; ++c) {
          o.check(pairing_e(pts[a] + pts[b], pts[c]) == e.pow(0) * pairing_e(pts[a], pts[c]) *
                                                            pairing_e(pts[b], pts[c]),
                  "additive left " + delta_str(d));
          o.check(pairing_e(pts[c], pts[a] + pts[b]) ==
                      pairing_e(pts[c], pts[a]) * pairing_e(pts[c], pts[b]),
                  "additive right " + delta_str(d));
          checks += 2;
        }
      }
      o.check(witness, "nondegenerate " + delta_str(d));
    }
  }
  o.detail << checks << " bi-additivity checks";
}

void isotropic_index(Outcome& o) {
  std::size_t isotropic = 0, total = 0;
  for (const auto& d : kDeltas) {
    const FinAbGroup k(d);
    const i64 big_n = k.order();
    for (const auto& e : all_subgroups(k)) {
      ++total;
      if (!is_isotropic(e)) continue;
      ++isotropic;
      const i64 size = static_cast<i64>(e.size());
      o.check(big_n % size == 0, "#E | N for " + delta_str(d));
      o.check((big_n * big_n / size) % big_n == 0, "N | index for " + delta_str(d));
    }
  }
  o.detail << isotropic << " isotropic of " << total << " subgroups";
}

void commutator_identity(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& d : std::vector<std::vector<i64>>{{1}, {2}, {3}, {4}, {2, 2}}) {
    const HeisGroup g{FinAbGroup(d)};
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        const auto x = g.element(a), y = g.element(b);
        const auto c = heis_mul(heis_mul(x, y), heis_mul(heis_inv(x), heis_inv(y)));
        o.check(c.x.index() == 0 && c.ell.index() == 0, "commutator is central");
        o.check(c.a == pairing_e(heis_pi(x), heis_pi(y)), "scalar part " + delta_str(d));
        ++pairs;
      }
  }
  o.detail << pairs << " pairs";
}

void abstract_witness(Outcome& o) {
  i64 last = 0;
  for (i64 n = 2; n <= 5; ++n) {
    const FinAbGroup k({n});
    const auto rep = min_abelian_index(k);
    o.check(rep.min_abelian_index.has_value(), "exhaustive scan for n=" + std::to_string(n));
    if (!rep.min_abelian_index) continue;
    const HeisGroup g(k);
    const auto best = oracle::largest_abelian_3gen(
        static_cast<std::uint32_t>(g.order()), g.identity(),
        [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); });
    const i64 brute = static_cast<i64>(g.order() / best);
    o.check(*rep.min_abelian_index == n && brute == n, "min index n=" + std::to_string(n));
    o.check(rep.certified_lower_bound == n, "certified bound n=" + std::to_string(n));
    o.check(rep.certified_lower_bound > last, "strictly increasing");
    last = rep.certified_lower_bound;
    o.detail << "n=" << n << ":" << *rep.min_abelian_index << " ";
  }
}

LevelStructure admissible(i64 n) {
  const auto curves = theta_curve_search(n, 200, 1);
  if (curves.empty()) throw Error(ErrorCode::NotAdmissible, "no admissible curve");
  return level_structure(curves.front(), n);
}

void h_of_level_check(Outcome& o) {
  for (i64 n : {2, 3}) {
    const auto ls = admissible(n);
    const auto& c = ls.curve;
    const auto h = h_of_level(c, n);
    const oracle::NaiveCurve nc{c.p(), c.a().value(), c.b().value()};
    std::set<oracle::Pt> naive_torsion;
    for (const auto& u : nc.points())
      if (!nc.mul(n, u)) naive_torsion.insert(u);
    std::set<oracle::Pt> got;
    for (const auto& u : h.elements) got.insert(naive(u));
    o.check(static_cast<i64>(h.elements.size()) == n * n, "n^2 points");
    o.check(got == naive_torsion, "equals E[n]");
    o.detail << c.str() << " n=" << n << ": " << h.elements.size() << " points; ";
  }
}

// multiplication table over the enumerated sublayer, located by point then function
struct Table {
  std::vector<ThetaElement> elems;
  std::vector<std::uint32_t> mul;
  std::uint32_t identity = 0;
  bool closed = true;

  explicit Table(const LevelStructure& ls) : elems(theta_enumerate_mu(ls)) {
    const auto m = static_cast<std::uint32_t>(elems.size());
    std::multimap<CurvePoint, std::uint32_t> by_point;
    for (std::uint32_t i = 0; i < m; ++i) by_point.emplace(elems[i].x, i);
    auto locate = [&](const ThetaElement& g) -> std::optional<std::uint32_t> {
      const auto [lo, hi] = by_point.equal_range(g.x);
      for (auto it = lo; it != hi; ++it)
        if (theta_equal(elems[it->second], g)) return it->second;
      return std::nullopt;
    };
    mul.resize(std::size_t{m} * m);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b) {
        const auto pos = locate(theta_mul(elems[a], elems[b]));
        closed = closed && pos.has_value();
        mul[a * m + b] = pos.value_or(0);
      }
    const auto id = locate(theta_identity(ls.curve, ls.n));
    closed = closed && id.has_value();
    identity = id.value_or(0);
  }

  std::uint32_t order() const { return static_cast<std::uint32_t>(elems.size()); }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return mul[a * order() + b]; }
};

void theta_group(Outcome& o) {
  std::optional<int> sigma;
  for (i64 n : {2, 3}) {
    const auto ls = admissible(n);
    const Table t(ls);
    const auto m = t.order();
    o.check(static_cast<i64>(m) == n * n * n, "order n^3");
    o.check(t.closed, "closure under theta_mul");
    for (std::uint32_t a = 0; a < m; ++a) {
      o.check(t.at(t.identity, a) == a && t.at(a, t.identity) == a, "identity");
      std::size_t inverses = 0;
      for (std::uint32_t b = 0; b < m; ++b) {
        inverses += t.at(a, b) == t.identity && t.at(b, a) == t.identity;
        for (std::uint32_t c = 0; c < m; ++c)
          o.check(t.at(t.at(a, b), c) == t.at(a, t.at(b, c)), "associativity");
      }
      o.check(inverses == 1, "inverses");
    }
    const auto& c = ls.curve;
    const oracle::NaiveCurve nc{c.p(), c.a().value(), c.b().value()};
    for (const auto& g : t.elems)
      for (const auto& h : t.elems) {
        const Fp comm = theta_commutator(g, h);  // throws unless constant over O
        const auto w = nc.weil(naive(g.x), naive(h.x), n, 1);
        o.check(w.has_value(), "naive Weil pairing defined");
        if (!w) continue;
        const Fp e = c.field(*w);
        const int s = comm == e ? 1 : comm == e.inverse() ? -1 : 0;
        o.check(s != 0, "commutator is e or e^-1");
        // when e = e^-1 the sign is not observable
        if (s != 0 && !(e == e.inverse())) {
          if (!sigma) sigma = s;
          o.check(*sigma == s, "one global sigma");
        }
      }
    o.detail << c.str() << " n=" << n << " order " << m << ", " << m * m << " commutators; ";
  }
  o.detail << "sigma=" << (sigma ? *sigma : 1);
}

void structure_theorem(Outcome& o) {
  for (i64 n : {2, 3}) {
    const auto ls = admissible(n);
    const Table t(ls);
    const HeisGroup g{FinAbGroup({n})};
    const auto m = t.order();
    std::vector<std::uint32_t> image(m);
    std::set<std::uint32_t> seen;
    for (std::uint32_t a = 0; a < m; ++a) {
      image[a] = g.index_of(theta_to_heisenberg(t.elems[a], ls));
      seen.insert(image[a]);
    }
    o.check(seen.size() == g.order(), "bijective");
    std::size_t mismatches = 0;
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b) mismatches += image[t.at(a, b)] != g.mul(image[a], image[b]);
    o.check(mismatches == 0, "table mismatch");
    o.detail << "n=" << n << ": " << m * m << " products, " << mismatches << " mismatches; ";
  }
}

void embedding(Outcome& o) {
  for (i64 n : {2, 3}) {
    const auto ls = admissible(n);
    const auto elems = theta_enumerate_mu(ls);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const auto gi = theta_embed(elems[i]), gj = theta_embed(elems[j]);
        o.check(bir_equal(theta_embed(theta_mul(elems[i], elems[j])), bir_compose(gj, gi)),
                "homomorphism");
        if (i < j) o.check(!bir_equal(gi, gj), "injective");
      }

    // pointwise semantics on seeded samples
    const auto& c = ls.curve;
    const auto pts = enumerate_points(c);
    std::mt19937_64 rng(20261016 + static_cast<std::uint64_t>(n));
    auto random_auto = [&] {
      auto f = TrackedFunction::constant(c, c.field(1 + static_cast<i64>(rng() % (c.p() - 1))));
      const auto& u = pts[rng() % pts.size()];
      const auto& v = pts[rng() % pts.size()];
      if (!(u.infinity && v.infinity)) f = f * line_function(c, u, v).pullback(pts[rng() % pts.size()]);
      return BirAuto{pts[rng() % pts.size()], f};
    };
    std::size_t compose = 0, inverse = 0;
    for (int trial = 0; trial < 100000 && (compose < 100 || inverse < 100); ++trial) {
      const auto a = random_auto(), b = random_auto();
      const SamplePoint s{pts[rng() % pts.size()], c.field(1 + static_cast<i64>(rng() % (c.p() - 1)))};
      const auto first = bir_apply(a, s);
      if (!first) continue;
      if (const auto second = bir_apply(b, *first)) {
        const auto direct = bir_apply(bir_compose(b, a), s);
        o.check(direct && *direct == *second, "compose pointwise");
        ++compose;
      }
      if (const auto back = bir_apply(bir_inverse(a), *first)) {
        o.check(*back == s, "inverse pointwise");
        ++inverse;
      }
    }
    o.check(compose >= 100 && inverse >= 100, "at least 100 samples per law");
    o.detail << "n=" << n << ": " << compose << "/" << inverse << " samples; ";
  }
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  while (const std::size_t k = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), k);
  return out;
}

std::string g_cli;

void end_to_end(Outcome& o) {
  nlohmann::json j;
  if (!g_cli.empty()) {
    j = nlohmann::json::parse(run_capture(g_cli + " nonjordan --n-max 4 2>/dev/null"));
  } else {
    j = to_json(cmd_nonjordan_table(4, kDefaultPrimeBudget));
  }
  std::vector<i64> bounds;
  for (const auto& row : j.at("rows")) bounds.push_back(row.at("certified_lower_bound").get<i64>());
  o.check(bounds == std::vector<i64>{1, 2, 3, 4}, "bounds 1,2,3,4");
  o.check(j.at("ok").get<bool>(), "every claim verified");
  o.detail << "bounds";
  for (auto b : bounds) o.detail << " " << b;
  o.detail << (g_cli.empty() ? " (library)" : " (cli)");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "pairing laws", 5, pairing_laws},
      {2, "isotropic index theorem", 30, isotropic_index},
      {3, "commutator identity", 60, commutator_identity},
      {4, "abstract non-Jordan witness", 300, abstract_witness},
      {5, "H(L^n) = E[n]", 10, h_of_level_check},
      {6, "theta group axioms and commutator", 60, theta_group},
      {7, "theta to Heisenberg isomorphism", 60, structure_theorem},
      {8, "embedding into Bir_1", 60, embedding},
      {9, "nonjordan --n-max 4", 300, end_to_end},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit_seconds) o.check(false, "time limit exceeded");
    all = all && o.ok;
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs) %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.limit_seconds, o.detail.str().c_str());
  }
  return all ? 0 : 1;
}
