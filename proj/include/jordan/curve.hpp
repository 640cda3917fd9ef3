#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/exactscalars.hpp"

namespace jordan {

/// Either the point at infinity O or an affine point (x, y) with residues in [0, p).
/// Ordering: O first, then affine points lexicographically by (x, y).
struct CurvePoint {
  bool infinity = true;
  i64 x = 0;
  i64 y = 0;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(i64 x, i64 y) { return {false, x, y}; }

  bool is_infinity() const { return infinity; }
  std::string str() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

/// "inf" or "x,y". Throws ParseError.
CurvePoint parse_point(std::string_view text);

/*
 * Short Weierstrass curve y^2 = x^3 + a x + b over F_p, p >= 5 prime.
 */
class Curve {
 public:
  /// Throws NotPrime (p not a prime >= 5) or Singular.
  Curve(i64 p, i64 a, i64 b);

  /// "p:a:b". Throws ParseError plus the constructor's errors.
  static Curve parse(std::string_view text);

  i64 p() const { return p_; }
  Fp a() const { return Fp(p_, a_); }
  Fp b() const { return Fp(p_, b_); }
  Fp field(i64 v) const { return Fp(p_, v); }

  Fp rhs(const Fp& x) const { return (x * x + a()) * x + b(); }
  bool contains(const CurvePoint& pt) const;
  /// Throws OffCurve.
  void require(const CurvePoint& pt) const;

  CurvePoint add(const CurvePoint& u, const CurvePoint& v) const;
  CurvePoint neg(const CurvePoint& u) const;
  CurvePoint sub(const CurvePoint& u, const CurvePoint& v) const { return add(u, neg(v)); }
  CurvePoint mul(i64 n, const CurvePoint& u) const;

  /// Smallest k >= 1 with k u = O.
  i64 point_order(const CurvePoint& u) const;

  std::string str() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  CurvePoint add_unchecked(const CurvePoint& u, const CurvePoint& v) const;

  i64 p_, a_, b_;
};

inline constexpr i64 kDefaultPrimeBudget = 2000;

/// All F_p-points, O first, then affine points in lexicographic order.
/// Throws BudgetExceeded when p > p_budget.
std::vector<CurvePoint> enumerate_points(const Curve& curve, i64 p_budget = kDefaultPrimeBudget);

/// #E(F_p) from character sums.
i64 count_points(const Curve& curve);

/// { P : n P = O }, sorted.
std::vector<CurvePoint> torsion_subgroup(const Curve& curve, i64 n,
                                         i64 p_budget = kDefaultPrimeBudget);

/// True when E(F_p) contains n^2 points of order dividing n and p = 1 mod n.
bool has_full_torsion(const Curve& curve, i64 n);

/*
 * Curves (p, a, b), p <= p_max, p = 1 (mod n), with full rational n-torsion.
 * Ordered by (p, a, b); stops after `limit` results (0 = no limit).
 */
std::vector<Curve> curve_search(i64 n, i64 p_max, std::size_t limit = 0);

/// As above, keeping only curves that also pass `accept`.
std::vector<Curve> curve_search(i64 n, i64 p_max, std::size_t limit,
                                const std::function<bool(const Curve&)>& accept);

/*
 * A divisor: finite formal integer combination of points. Zero coefficients
 * are never stored.
 */
class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const CurvePoint& pt, i64 mult = 1);

  const std::map<CurvePoint, i64>& terms() const { return terms_; }
  i64 coefficient(const CurvePoint& pt) const;
  bool empty() const { return terms_.empty(); }
  bool in_support(const CurvePoint& pt) const { return terms_.contains(pt); }

  void add(const CurvePoint& pt, i64 mult);
  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator-() const;
  Divisor scaled(i64 k) const;

  i64 degree() const;
  /// Group-law sum of mult * P.
  CurvePoint sum(const Curve& curve) const;
  /// T_y^* D: every point Q replaced by Q - y.
  Divisor pullback(const Curve& curve, const CurvePoint& y) const;

  std::string str() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<CurvePoint, i64> terms_;
};

/// Degree zero and group-law sum O.
bool is_principal(const Curve& curve, const Divisor& d);

}  // namespace jordan
