#include "curve_oracles.hpp"
#include "doctest.h"
#include "jordan/error.hpp"
#include "jordan/miller.hpp"

using namespace jordan;

namespace {

const Curve kF5(5, 1, 0);
const CurvePoint O = CurvePoint::at_infinity();
CurvePoint pt(i64 x, i64 y) { return CurvePoint::affine(x, y); }

oracle::Pt to_naive(const CurvePoint& u) {
  if (u.infinity) return std::nullopt;
  return std::pair(u.x, u.y);
}

struct Instance {
  Curve curve;
  i64 n;
};

const std::vector<Instance> kInstances = {
    {Curve(5, 4, 0), 2}, {Curve(7, 0, 1), 2}, {Curve(7, 0, 2), 3},  {Curve(13, 0, 3), 3},
    {Curve(13, 0, 5), 4}, {Curve(17, 1, 0), 4}, {Curve(31, 0, 11), 5},
};

}  // namespace

TEST_CASE("miller functions") {
  for (const auto& [c, n] : kInstances) {
    for (const auto& p : torsion_subgroup(c, n)) {
      if (p.infinity) continue;
      const auto f = miller_function(c, n, p);
      CHECK(f.divisor() == Divisor::point(p, n) - Divisor::point(O, n));
      const auto ref = reference_point(c, f.divisor());
      REQUIRE(ref.has_value());
      CHECK(f.eval(*ref) == c.field(1));
      const auto m = miller_function_monic(c, n, p);
      CHECK(m.divisor() == f.divisor());
      CHECK(constant_ratio(m, f).has_value());
    }
  }
  CHECK_THROWS_AS(miller_function(kF5, 3, pt(2, 0)), Error);
  CHECK_THROWS_AS(miller_function(kF5, 2, O), Error);
  CHECK(reference_point(kF5, Divisor::point(pt(0, 0))) == pt(2, 0));
}

TEST_CASE("weil pairing matches the textbook Miller oracle") {
  for (const auto& [c, n] : kInstances) {
    const oracle::NaiveCurve nc{c.p(), c.a().value(), c.b().value()};
    const auto tor = torsion_subgroup(c, n);
    int compared = 0;
    for (const auto& p : tor)
      for (const auto& q : tor) {
        const auto expect = nc.weil(to_naive(p), to_naive(q), n, 7);
        if (!expect) continue;
        CHECK(weil_pairing_value(c, p, q, n) == c.field(*expect));
        ++compared;
      }
    // the smallest curves have no usable offsets for some pairs
    if (c.p() > 7) CHECK(compared == static_cast<int>(tor.size() * tor.size()));
  }
}

TEST_CASE("weil pairing laws") {
  for (const auto& [c, n] : kInstances) {
    const auto tor = torsion_subgroup(c, n);
    REQUIRE(static_cast<i64>(tor.size()) == n * n);
    std::map<std::pair<CurvePoint, CurvePoint>, RootOfUnity> e;
    for (const auto& p : tor)
      for (const auto& q : tor) e.emplace(std::pair(p, q), weil_pairing(c, p, q, n));
    bool primitive = false;
    for (const auto& p : tor) {
      CHECK(e.at({p, p}).is_one());
      bool degenerate = true;
      for (const auto& q : tor) {
        const auto v = e.at({p, q});
        CHECK(v.modulus() == n);
        CHECK(v * e.at({q, p}) == RootOfUnity::one(n));
        primitive = primitive || v.order() == n;
        degenerate = degenerate && v.is_one();
        for (const auto& r : tor) CHECK(e.at({c.add(p, q), r}) == e.at({p, r}) * e.at({q, r}));
      }
      CHECK(degenerate == p.infinity);
    }
    CHECK(primitive);
    for (std::uint64_t seed = 1; seed < 4; ++seed)
      CHECK(weil_pairing(c, tor[1], tor.back(), n, seed) == e.at({tor[1], tor.back()}));
  }
}

TEST_CASE("weil pairing examples") {
  // (0,0), (1,0) on y^2 = x(x-1)(x-3) are (2,0), (3,0) here
  CHECK(weil_pairing_value(kF5, pt(2, 0), pt(3, 0), 2) == kF5.field(4));
  CHECK(weil_pairing(kF5, pt(2, 0), pt(3, 0), 2) == RootOfUnity(2, 1));
  CHECK(weil_pairing_monic(kF5, pt(2, 0), pt(3, 0), 2) == kF5.field(4));
  CHECK(weil_pairing(kF5, pt(2, 0), pt(2, 0), 2).is_one());
  CHECK(weil_pairing(kF5, O, pt(3, 0), 2).is_one());
  CHECK_THROWS_AS(weil_pairing(kF5, pt(2, 0), pt(3, 0), 3), Error);
  const Curve c(13, 0, 5);
  const auto tor = torsion_subgroup(c, 4);
  for (const auto& p : tor)
    for (const auto& q : tor)
      CHECK(weil_pairing_offsets(c, p, q, 4, 5) == weil_pairing_monic(c, p, q, 4));
}
