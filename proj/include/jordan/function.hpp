#pragma once

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/exactscalars.hpp"

namespace jordan {

/*
 * A line on the curve: vertical  x - c,  or chord/tangent  y - slope x - c.
 * Its divisor is known in closed form: the listed zeros (with repetition)
 * minus zero_count (O).
 */
struct Line {
  enum class Kind { Vertical, Chord };

  Kind kind = Kind::Vertical;
  Fp slope;
  Fp intercept;
  std::array<CurvePoint, 3> zeros{};
  int zero_count = 0;

  Fp value_at(const CurvePoint& affine_pt) const;
  Divisor divisor() const;

  auto key() const { return std::tuple(kind, slope, intercept); }
};

/// The line through P and Q (tangent when P == Q, vertical when P == -Q or
/// one of them is O). Throws OffCurve, or InvalidArgument when both are O.
Line line_through(const Curve& curve, const CurvePoint& p, const CurvePoint& q);

/// X -> line(X + offset) ^ exponent.
struct Atom {
  Line line;
  CurvePoint offset;
  i64 exponent = 1;
};

/*
 * Nonzero rational function on the curve kept in factored form:
 *   X -> constant * prod_i line_i(X + offset_i) ^ exponent_i.
 * Atoms are kept sorted with equal (line, offset) pairs merged, so products,
 * inverses and pullbacks are exact and cancel syntactically where possible.
 * There is no canonical form beyond that; equality is decided by
 * divisor + constant-ratio sampling (see constant_ratio).
 */
class TrackedFunction {
 public:
  /// Throws ZeroScale when c == 0.
  static TrackedFunction constant(const Curve& curve, const Fp& c);
  static TrackedFunction from_line(const Curve& curve, const Line& line);

  const Curve& curve() const { return curve_; }
  const Fp& scale() const { return constant_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  Divisor divisor() const;
  bool is_constant() const { return atoms_.empty(); }

  TrackedFunction operator*(const TrackedFunction& o) const;
  TrackedFunction inverse() const;
  TrackedFunction pow(i64 k) const;
  TrackedFunction scaled(const Fp& c) const;
  /// T_y^* f : X -> f(X + y).
  TrackedFunction pullback(const CurvePoint& y) const;

  /// (ord_P f, leading coefficient in the uniformizer s_P(X) = z(X - P),
  /// z = -x/y). Defined at every point, including zeros and poles.
  std::pair<i64, Fp> leading(const CurvePoint& pt) const;

  /// f(P). Throws EvalAtSupport when P is a zero or pole of f.
  Fp eval(const CurvePoint& pt) const;

 private:
  TrackedFunction(Curve curve, Fp c) : curve_(std::move(curve)), constant_(std::move(c)) {}
  void canonicalize();
  void require_same_curve(const TrackedFunction& o) const;

  Curve curve_;
  Fp constant_;
  std::vector<Atom> atoms_;
};

TrackedFunction line_function(const Curve& curve, const CurvePoint& p, const CurvePoint& q);
TrackedFunction fn_mul(const TrackedFunction& f, const TrackedFunction& g);
TrackedFunction fn_inv(const TrackedFunction& f);
Fp fn_eval(const TrackedFunction& f, const CurvePoint& pt);
TrackedFunction translate_pullback(const TrackedFunction& f, const CurvePoint& y);

/// O followed by affine points in increasing x; at most `count`.
std::vector<CurvePoint> sample_points(const Curve& curve, std::size_t count);

inline constexpr std::size_t kRatioSamples = 5;

/*
 * If f and g have the same divisor and f/g takes the same value at
 * min(kRatioSamples, #E) sample points, that value; otherwise nullopt.
 */
std::optional<Fp> constant_ratio(const TrackedFunction& f, const TrackedFunction& g);

/// Equal as functions: same divisor and ratio exactly 1.
bool fn_equal(const TrackedFunction& f, const TrackedFunction& g);

}  // namespace jordan
