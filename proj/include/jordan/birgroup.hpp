#pragma once

#include <optional>

#include "jordan/function.hpp"
#include "jordan/theta.hpp"

namespace jordan {

/// A(y, f): (x, t) -> (x + y, f(x) t) on E x A^1.
struct BirAuto {
  CurvePoint y;
  TrackedFunction f;

  static BirAuto identity(const Curve& curve);
};

struct SamplePoint {
  CurvePoint x;
  Fp t;

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// A(y2, f2) A(y1, f1) = A(y1 + y2, T_{y1}^* f2 * f1); `first` acts first.
/// Throws CurveMismatch.
BirAuto bir_compose(const BirAuto& second, const BirAuto& first);

/// A(-y, T_{-y}^* (1/f)).
BirAuto bir_inverse(const BirAuto& a);

/// nullopt when s.x lies in the support of div f (the map is undefined there).
std::optional<SamplePoint> bir_apply(const BirAuto& a, const SamplePoint& s);

/// Same translation, same divisor, function ratio exactly 1.
bool bir_equal(const BirAuto& a, const BirAuto& b);

/// (y, [h]) -> A(y, h).
BirAuto theta_embed(const ThetaElement& g);

}  // namespace jordan
