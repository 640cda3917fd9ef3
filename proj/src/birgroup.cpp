#include "jordan/birgroup.hpp"

#include "jordan/error.hpp"

namespace jordan {

BirAuto BirAuto::identity(const Curve& curve) {
  return {CurvePoint::at_infinity(), TrackedFunction::constant(curve, curve.field(1))};
}

BirAuto bir_compose(const BirAuto& second, const BirAuto& first) {
  if (!(second.f.curve() == first.f.curve()))
    throw Error(ErrorCode::CurveMismatch,
                second.f.curve().str() + " vs " + first.f.curve().str());
  const auto& curve = first.f.curve();
  return {curve.add(first.y, second.y), second.f.pullback(first.y) * first.f};
}

BirAuto bir_inverse(const BirAuto& a) {
  const CurvePoint minus = a.f.curve().neg(a.y);
  return {minus, a.f.inverse().pullback(minus)};
}

std::optional<SamplePoint> bir_apply(const BirAuto& a, const SamplePoint& s) {
  const auto& curve = a.f.curve();
  curve.require(s.x);
  if (a.f.divisor().in_support(s.x)) return std::nullopt;
  return SamplePoint{curve.add(s.x, a.y), a.f.eval(s.x) * s.t};
}

bool bir_equal(const BirAuto& a, const BirAuto& b) {
  return a.f.curve() == b.f.curve() && a.y == b.y && fn_equal(a.f, b.f);
}

BirAuto theta_embed(const ThetaElement& g) { return {g.x, g.f}; }

}  // namespace jordan
