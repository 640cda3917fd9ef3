#include <random>
#include <set>

#include "doctest.h"
#include "jordan/error.hpp"
#include "jordan/heisenberg.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

HeisElement he(const FinAbGroup& k, i64 a, std::vector<i64> x, std::vector<i64> ell) {
  return {RootOfUnity(k.order(), a), KElement{k, std::move(x)}, Character{k, std::move(ell)}};
}

}  // namespace

TEST_CASE("heis_mul examples") {
  const FinAbGroup k({2});
  CHECK(heis_mul(he(k, 0, {1}, {0}), he(k, 0, {0}, {1})) == he(k, 1, {1}, {1}));
  CHECK(heis_mul(he(k, 0, {0}, {1}), he(k, 0, {1}, {0})) == he(k, 0, {1}, {1}));
  const auto id = HeisElement::identity(k);
  for (std::uint32_t i = 0; i < 8; ++i) {
    const auto g = HeisGroup(k).element(i);
    CHECK(heis_mul(id, g) == g);
    CHECK(heis_mul(g, id) == g);
  }
  CHECK_THROWS_AS((void)heis_mul(id, HeisElement::identity(FinAbGroup({3}))), Error);
}

TEST_CASE("heis_inv examples") {
  const FinAbGroup k({2});
  CHECK(heis_inv(HeisElement::identity(k)) == HeisElement::identity(k));
  const auto g = he(k, 0, {1}, {1});
  CHECK(heis_inv(g) == he(k, 1, {1}, {1}));
  CHECK(heis_mul(g, heis_inv(g)) == HeisElement::identity(k));
  const FinAbGroup k5({5});
  CHECK(heis_inv(HeisElement::central(k5, 2)) == HeisElement::central(k5, 3));
}

TEST_CASE("heis_commutator and heis_pi examples") {
  const FinAbGroup k({2});
  const auto g = he(k, 0, {1}, {0}), h = he(k, 0, {0}, {1});
  CHECK(heis_commutator(g, h) == RootOfUnity(2, 1));
  CHECK(heis_commutator(g, h) == pairing_e(heis_pi(g), heis_pi(h)));
  CHECK(heis_commutator(HeisElement::central(k, 1), h).is_one());
  CHECK(heis_commutator(h, h).is_one());
  CHECK(heis_pi(HeisElement::central(k, 1)) == HPoint::zero(k));
  CHECK(heis_pi(he(k, 1, {1}, {1})) == HPoint{KElement{k, {1}}, Character{k, {1}}});
  std::set<i64> image;
  for (std::uint32_t i = 0; i < 8; ++i) image.insert(heis_pi(HeisGroup(k).element(i)).index());
  CHECK(image.size() == 4);
}

TEST_CASE("index route agrees with value route") {
  for (auto d : std::vector<std::vector<i64>>{{2}, {3}, {4}, {2, 2}}) {
    const HeisGroup g{FinAbGroup(d)};
    const auto order = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t a = 0; a < order; ++a) {
      CHECK(g.index_of(g.element(a)) == a);
      CHECK(g.inv(a) == g.index_of(heis_inv(g.element(a))));
      for (std::uint32_t b = 0; b < order; ++b)
        CHECK(g.mul(a, b) == g.index_of(heis_mul(g.element(a), g.element(b))));
    }
  }
}

TEST_CASE("group axioms, center and commutator identity (exhaustive N <= 4)") {
  for (auto d : std::vector<std::vector<i64>>{{1}, {2}, {3}, {4}, {2, 2}}) {
    const FinAbGroup k(d);
    const HeisGroup g(k);
    const HGroup h(k);
    const auto order = static_cast<std::uint32_t>(g.order());
    const i64 n = k.order();
    for (std::uint32_t a = 0; a < order; ++a) {
      CHECK(g.mul(a, g.inv(a)) == 0);
      for (i64 c = 0; c < n; ++c) {
        const auto z = static_cast<std::uint32_t>(c * n * n);
        CHECK(g.mul(a, z) == g.mul(z, a));
      }
      for (std::uint32_t b = 0; b < order; ++b) {
        const auto comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        CHECK(g.project(comm) == 0);
        CHECK(static_cast<i64>(comm / (n * n)) == h.pairing_exponent(g.project(a), g.project(b)));
        if (n <= 3)
          for (std::uint32_t c = 0; c < order; ++c)
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST_CASE("associativity on random triples up to N = 6") {
  std::mt19937_64 rng(11);
  for (auto d : std::vector<std::vector<i64>>{{4}, {2, 2}, {5}, {6}}) {
    const FinAbGroup k(d);
    const HeisGroup g(k);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
    for (int t = 0; t < 2000; ++t) {
      const auto a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
      CHECK(heis_mul(heis_mul(a, b), c) == heis_mul(a, heis_mul(b, c)));
    }
  }
}

TEST_CASE("abelian iff isotropic image (all subgroups, N <= 4)") {
  for (auto d : std::vector<std::vector<i64>>{{2}, {3}, {4}, {2, 2}}) {
    const FinAbGroup k(d);
    const HeisGroup g(k);
    const HGroup h(k);
    const auto subs = enumerate_subgroups(g);
    std::size_t abelian = 0;
    for (const auto& s : subs) {
      std::set<std::uint32_t> image;
      for (auto e : s.elements) image.insert(g.project(e));
      const HSubgroup img{k, ElementList(image.begin(), image.end())};
      const bool ab = is_abelian(g, s.elements);
      abelian += ab;
      CHECK(ab == is_isotropic(img));
      if (ab) CHECK(static_cast<i64>(h.order() / img.size()) >= k.order());
    }
    // bounded-generator abelian scan finds the same abelian subgroups
    LatticeOptions opt;
    opt.abelian_only = true;
    opt.max_generators = 3;
    CHECK(enumerate_subgroups(g, opt).size() == abelian);
  }
}

TEST_CASE("subgroup lattice of G^1 for delta=(2) matches subset enumeration") {
  const HeisGroup g{FinAbGroup({2})};
  const auto brute = oracle::subgroups_by_subsets(
      8, 0, [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); });
  std::set<ElementList> mine;
  for (const auto& s : enumerate_subgroups(g)) mine.insert(s.elements);
  CHECK(mine == brute);
  CHECK(mine.size() == 10);  // dihedral group of order 8
}

TEST_CASE("min_abelian_index examples against the generator-triple oracle") {
  struct Case {
    std::vector<i64> delta;
    i64 expected;
  };
  for (const auto& c : std::vector<Case>{{{1}, 1}, {{2}, 2}, {{3}, 3}, {{2, 2}, 4}, {{4}, 4}}) {
    const FinAbGroup k(c.delta);
    const HeisGroup g(k);
    const auto largest = oracle::largest_abelian_3gen(
        static_cast<std::uint32_t>(g.order()), 0,
        [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); });
    CHECK(static_cast<i64>(g.order() / largest) == c.expected);

    const auto r = min_abelian_index(k);
    REQUIRE(r.min_abelian_index.has_value());
    CHECK(*r.min_abelian_index == c.expected);
    CHECK(r.certified_lower_bound == k.order());
    CHECK(r.certified_lower_bound <= *r.min_abelian_index);
    // witness is abelian and achieves the minimum
    std::vector<std::uint32_t> gens;
    for (const auto& w : r.witness_generators) gens.push_back(g.index_of(w));
    const auto span = closure(g, gens);
    CHECK(is_abelian(g, span));
    CHECK(static_cast<i64>(g.order() / span.size()) == *r.min_abelian_index);
  }
}

TEST_CASE("min_abelian_index is deterministic and serializes") {
  const FinAbGroup k({3});
  const auto a = to_json(min_abelian_index(k)), b = to_json(min_abelian_index(k));
  CHECK(a == b);
  CHECK(a["N"] == 3);
  CHECK(a["group_order"] == 27);
  CHECK(a["min_abelian_index"] == 3);
  CHECK(a["certified_lower_bound"] == 3);
  CHECK(a["delta"] == nlohmann::json::array({3}));
  CHECK(a.contains("witness_generators"));
}

TEST_CASE("min_abelian_index over budget reports only the bound and the Lagrangian witness") {
  const FinAbGroup k({7});
  const auto r = min_abelian_index(k);
  CHECK_FALSE(r.min_abelian_index.has_value());
  CHECK(r.certified_lower_bound == 7);
  CHECK(r.witness_order == 49);
  CHECK(to_json(r)["min_abelian_index"].is_null());
}

TEST_CASE("lagrangian_lift") {
  for (auto d : std::vector<std::vector<i64>>{{2}, {3}, {2, 2}, {6}}) {
    const FinAbGroup k(d);
    const HeisGroup g(k);
    const auto lift = lagrangian_lift(g);
    CHECK(is_subgroup(g, lift));
    CHECK(is_abelian(g, lift));
    CHECK(static_cast<i64>(g.order() / lift.size()) == k.order());
    std::set<std::uint32_t> image;
    for (auto e : lift) image.insert(g.project(e));
    CHECK(is_isotropic(HSubgroup{k, ElementList(image.begin(), image.end())}));
  }
}
