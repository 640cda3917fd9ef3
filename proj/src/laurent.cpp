#include "jordan/laurent.hpp"

#include <algorithm>

#include "jordan/error.hpp"

namespace jordan {

Laurent::Laurent(i64 p, int start, std::vector<i64> coeffs, int precision)
    : p_(p), start_(start), c_(std::move(coeffs)), precision_(precision) {
  c_.resize(static_cast<std::size_t>(std::max(0, precision_ - start_)), 0);
  for (auto& v : c_) v = mod_floor(v, p_);
}

Laurent Laurent::constant(i64 p, i64 c, int precision) { return monomial(p, c, 0, precision); }

Laurent Laurent::monomial(i64 p, i64 c, int k, int precision) {
  return Laurent(p, k, {c}, std::max(precision, k + 1));
}

i64 Laurent::coefficient(int k) const {
  if (k < start_ || k >= precision_) return 0;
  return c_[static_cast<std::size_t>(k - start_)];
}

int Laurent::order_or_precision() const {
  for (int k = start_; k < precision_; ++k)
    if (coefficient(k) != 0) return k;
  return precision_;
}

int Laurent::valuation() const {
  const int v = order_or_precision();
  if (v >= precision_) throw Error(ErrorCode::PrecisionLoss, "series vanishes to known precision");
  return v;
}

Fp Laurent::leading() const { return Fp(p_, coefficient(valuation())); }

Laurent Laurent::operator+(const Laurent& o) const {
  const int start = std::min(start_, o.start_);
  const int prec = std::min(precision_, o.precision_);
  std::vector<i64> c;
  for (int k = start; k < prec; ++k) c.push_back(coefficient(k) + o.coefficient(k));
  return Laurent(p_, start, std::move(c), prec);
}

Laurent Laurent::operator-() const {
  std::vector<i64> c(c_);
  for (auto& v : c) v = -v;
  return Laurent(p_, start_, std::move(c), precision_);
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  const int v1 = order_or_precision(), v2 = o.order_or_precision();
  const int prec = std::min(v1 + o.precision_, v2 + precision_);
  const int start = v1 + v2;
  std::vector<i64> c(static_cast<std::size_t>(std::max(0, prec - start)), 0);
  for (int i = v1; i < precision_; ++i) {
    const i64 ci = coefficient(i);
    if (ci == 0) continue;
    for (int j = v2; j < o.precision_ && i + j < prec; ++j)
      c[static_cast<std::size_t>(i + j - start)] =
          (c[static_cast<std::size_t>(i + j - start)] + ci * o.coefficient(j)) % p_;
  }
  return Laurent(p_, start, std::move(c), prec);
}

Laurent Laurent::inverse() const {
  const int v = valuation();
  const int rel = precision_ - v;
  std::vector<i64> u(static_cast<std::size_t>(rel));
  for (int k = 0; k < rel; ++k) u[static_cast<std::size_t>(k)] = coefficient(v + k);
  const i64 inv0 = Fp(p_, u[0]).inverse().value();
  std::vector<i64> r(static_cast<std::size_t>(rel), 0);
  r[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    i64 acc = 0;
    for (int j = 1; j <= k; ++j)
      acc = (acc + u[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)]) % p_;
    r[static_cast<std::size_t>(k)] = mod_floor(-acc * inv0, p_);
  }
  return Laurent(p_, -v, std::move(r), -v + rel);
}

FormalPoint formal_point_at_infinity(const Curve& curve, int precision) {
  const i64 p = curve.p();
  const Laurent s = Laurent::monomial(p, 1, 1, precision);
  const Laurent s3 = Laurent::monomial(p, 1, 3, precision);
  const Laurent a = Laurent::constant(p, curve.a().value(), precision);
  const Laurent b = Laurent::constant(p, curve.b().value(), precision);
  Laurent w = s3;
  // each pass fixes at least one more coefficient
  for (int it = 0; it < precision; ++it) w = s3 + a * s * w * w + b * w * w * w;
  const Laurent winv = w.inverse();
  return {s * winv, -winv};
}

FormalPoint formal_translate(const Curve& curve, const CurvePoint& r, const FormalPoint& w) {
  if (r.infinity) return w;
  const i64 p = curve.p();
  const int prec = w.x.precision() + 8;
  const Laurent xr = Laurent::constant(p, r.x, prec), yr = Laurent::constant(p, r.y, prec);
  const Laurent slope = (w.y - yr) * (w.x - xr).inverse();
  const Laurent x3 = slope * slope - xr - w.x;
  const Laurent y3 = slope * (xr - x3) - yr;
  return {x3, y3};
}

}  // namespace jordan
