#pragma once

#include <vector>

#include "jordan/curve.hpp"
#include "jordan/exactscalars.hpp"

namespace jordan {

/*
 * Truncated Laurent series over F_p in one variable s, known modulo
 * s^precision. Coefficients are stored for exponents [start, precision);
 * leading zeros are allowed, the true valuation is found on demand.
 */
class Laurent {
 public:
  Laurent(i64 p, int start, std::vector<i64> coeffs, int precision);

  static Laurent constant(i64 p, i64 c, int precision);
  /// c s^k, exact up to `precision`.
  static Laurent monomial(i64 p, i64 c, int k, int precision);

  i64 p() const { return p_; }
  int precision() const { return precision_; }
  i64 coefficient(int k) const;

  /// Throws PrecisionLoss when every known coefficient vanishes.
  int valuation() const;
  Fp leading() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent inverse() const;

 private:
  /// Valuation, or precision_ when zero to known precision.
  int order_or_precision() const;

  i64 p_;
  int start_;
  std::vector<i64> c_;
  int precision_;
};

/*
 * The generic point W near O with uniformizer s = -x/y, i.e. x(s), y(s) as
 * Laurent series. Expanded through w = -1/y = s^3 + a s w^2 + b w^3.
 */
struct FormalPoint {
  Laurent x;
  Laurent y;
};

FormalPoint formal_point_at_infinity(const Curve& curve, int precision = 32);

/// R + W as Laurent series in s, for R a rational point (R = O gives W).
FormalPoint formal_translate(const Curve& curve, const CurvePoint& r, const FormalPoint& w);

}  // namespace jordan
