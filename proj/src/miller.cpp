#include "jordan/miller.hpp"

#include <bit>
#include <random>

#include "jordan/error.hpp"

namespace jordan {

namespace {

void require_torsion(const Curve& curve, i64 n, const CurvePoint& p) {
  curve.require(p);
  if (n < 1 || !curve.mul(n, p).infinity)
    throw Error(ErrorCode::NotTorsion, p.str() + " is not killed by " + std::to_string(n));
}

// div = n(P) - n(O), no normalization
TrackedFunction miller_raw(const Curve& curve, i64 n, const CurvePoint& p) {
  require_torsion(curve, n, p);
  if (p.infinity) throw Error(ErrorCode::NotTorsion, "Miller function needs P != O");
  // f_i has divisor i(P) - (iP) - (i-1)(O)
  auto f = TrackedFunction::constant(curve, curve.field(1));
  CurvePoint t = p;
  const int top = std::bit_width(static_cast<std::uint64_t>(n)) - 1;
  auto step = [&](const CurvePoint& u, const CurvePoint& v) {
    const CurvePoint w = curve.add(u, v);
    // P of order dividing n/2^k: the line through O and O is the constant 1
    if (u.infinity && v.infinity) return w;
    f = f * line_function(curve, u, v);
    if (!w.infinity) f = f * line_function(curve, w, CurvePoint::at_infinity()).inverse();
    return w;
  };
  for (int bit = top - 1; bit >= 0; --bit) {
    f = f.pow(2);
    t = step(t, t);
    if ((n >> bit) & 1) t = step(t, p);
  }
  return f;
}

}  // namespace

std::optional<CurvePoint> reference_point(const Curve& curve, const Divisor& d) {
  for (i64 x = 0; x < curve.p(); ++x) {
    const auto y = fp_sqrt(curve.rhs(curve.field(x)));
    if (!y) continue;
    const i64 lo = std::min(y->value(), (-*y).value()), hi = std::max(y->value(), (-*y).value());
    for (i64 yy : {lo, hi}) {
      const auto pt = CurvePoint::affine(x, yy);
      if (!d.in_support(pt)) return pt;
    }
  }
  return std::nullopt;
}

TrackedFunction miller_function(const Curve& curve, i64 n, const CurvePoint& p) {
  auto f = miller_raw(curve, n, p);
  if (const auto r = reference_point(curve, f.divisor())) f = f.scaled(f.eval(*r).inverse());
  return f;
}

TrackedFunction miller_function_monic(const Curve& curve, i64 n, const CurvePoint& p) {
  auto f = miller_raw(curve, n, p);
  return f.scaled(f.leading(CurvePoint::at_infinity()).second.inverse());
}

Fp weil_pairing_offsets(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                        std::uint64_t seed) {
  require_torsion(curve, n, p);
  require_torsion(curve, n, q);
  const Fp one = curve.field(1);
  if (p.infinity || q.infinity || p == q) return one;
  const auto fp = miller_function(curve, n, p);
  const auto fq = miller_function(curve, n, q);
  const auto points = enumerate_points(curve, curve.p());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (int attempt = 0; attempt < kWeilRetries; ++attempt) {
    const CurvePoint u = points[pick(rng)];
    const CurvePoint qu = curve.add(q, u), pu = curve.sub(p, u), mu = curve.neg(u);
    // D_P = (P) - (O) and D_Q = (Q+U) - (U) must have disjoint supports
    if (qu == p || qu.infinity || u == p || u.infinity) continue;
    return fp.eval(qu) * fq.eval(mu) / (fp.eval(u) * fq.eval(pu));
  }
  throw Error(ErrorCode::DegenerateAfterRetries,
              "no usable offset after " + std::to_string(kWeilRetries) + " draws");
}

Fp weil_pairing_monic(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n) {
  require_torsion(curve, n, p);
  require_torsion(curve, n, q);
  const Fp one = curve.field(1);
  if (p.infinity || q.infinity || p == q) return one;
  const Fp sign = n % 2 == 0 ? one : -one;
  return sign * miller_function_monic(curve, n, p).eval(q) /
         miller_function_monic(curve, n, q).eval(p);
}

Fp weil_pairing_value(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                      std::uint64_t seed) {
  require_torsion(curve, n, p);
  require_torsion(curve, n, q);
  bool usable = false;
  for (const auto& u : enumerate_points(curve, curve.p())) {
    const CurvePoint qu = curve.add(q, u);
    if (!(qu == p || qu.infinity || u == p || u.infinity)) {
      usable = true;
      break;
    }
  }
  return usable ? weil_pairing_offsets(curve, p, q, n, seed) : weil_pairing_monic(curve, p, q, n);
}

RootOfUnity weil_pairing(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                         std::uint64_t seed) {
  const Fp value = weil_pairing_value(curve, p, q, n, seed);
  const Fp g = primitive_root_of_unity(curve.p(), n);
  const auto root = field_to_root(value, g, n);
  if (!root) throw Error(ErrorCode::NoRootsOfUnity, "pairing value is not an n-th root of unity");
  return *root;
}

}  // namespace jordan
