#include "jordan/function.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "jordan/error.hpp"
#include "jordan/laurent.hpp"

namespace jordan {

namespace {

const FormalPoint& generic_point(const Curve& curve) {
  static std::mutex mu;
  static std::map<std::tuple<i64, i64, i64>, FormalPoint> cache;
  const std::lock_guard lock(mu);
  const auto key = std::tuple(curve.p(), curve.a().value(), curve.b().value());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, formal_point_at_infinity(curve)).first;
  return it->second;
}

Laurent line_series(const Curve& curve, const Line& line, const FormalPoint& pt) {
  const i64 p = curve.p();
  const int prec = pt.x.precision() + 8;
  if (line.kind == Line::Kind::Vertical) return pt.x - Laurent::constant(p, line.intercept.value(), prec);
  return pt.y - Laurent::constant(p, line.slope.value(), prec) * pt.x -
         Laurent::constant(p, line.intercept.value(), prec);
}

}  // namespace

Fp Line::value_at(const CurvePoint& pt) const {
  const i64 p = slope.p();
  if (kind == Kind::Vertical) return Fp(p, pt.x) - intercept;
  return Fp(p, pt.y) - slope * Fp(p, pt.x) - intercept;
}

Divisor Line::divisor() const {
  Divisor d;
  for (int i = 0; i < zero_count; ++i) d.add(zeros[static_cast<std::size_t>(i)], 1);
  d.add(CurvePoint::at_infinity(), -zero_count);
  return d;
}

Line line_through(const Curve& curve, const CurvePoint& u, const CurvePoint& v) {
  curve.require(u);
  curve.require(v);
  if (u.infinity && v.infinity)
    throw Error(ErrorCode::InvalidArgument, "no line through O and O");
  const i64 p = curve.p();
  Line line;
  line.slope = Fp(p, 0);
  const CurvePoint& affine = u.infinity ? v : u;
  const CurvePoint& other = u.infinity ? u : v;
  if (other.infinity || (u.x == v.x && (Fp(p, u.y) + Fp(p, v.y)).is_zero())) {
    line.kind = Line::Kind::Vertical;
    line.intercept = Fp(p, affine.x);
    line.zeros = {affine, curve.neg(affine), CurvePoint{}};
    line.zero_count = 2;
    return line;
  }
  const Fp x1(p, u.x), y1(p, u.y), x2(p, v.x), y2(p, v.y);
  line.kind = Line::Kind::Chord;
  line.slope = u == v ? (Fp(p, 3) * x1 * x1 + curve.a()) / (y1 + y1) : (y2 - y1) / (x2 - x1);
  line.intercept = y1 - line.slope * x1;
  line.zeros = {u, v, curve.neg(curve.add(u, v))};
  line.zero_count = 3;
  return line;
}

TrackedFunction TrackedFunction::constant(const Curve& curve, const Fp& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroScale, "constant function must be nonzero");
  if (c.p() != curve.p()) throw Error(ErrorCode::CurveMismatch, "constant over the wrong field");
  return TrackedFunction(curve, c);
}

TrackedFunction TrackedFunction::from_line(const Curve& curve, const Line& line) {
  TrackedFunction f(curve, curve.field(1));
  f.atoms_.push_back({line, CurvePoint::at_infinity(), 1});
  return f;
}

void TrackedFunction::require_same_curve(const TrackedFunction& o) const {
  if (!(curve_ == o.curve_))
    throw Error(ErrorCode::CurveMismatch, curve_.str() + " vs " + o.curve_.str());
}

void TrackedFunction::canonicalize() {
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& l, const Atom& r) {
    return std::tuple(l.line.key(), l.offset) < std::tuple(r.line.key(), r.offset);
  });
  std::vector<Atom> merged;
  for (const auto& atom : atoms_) {
    if (!merged.empty() && merged.back().line.key() == atom.line.key() &&
        merged.back().offset == atom.offset) {
      merged.back().exponent += atom.exponent;
    } else {
      merged.push_back(atom);
    }
    if (merged.back().exponent == 0) merged.pop_back();
  }
  atoms_ = std::move(merged);
}

Divisor TrackedFunction::divisor() const {
  Divisor d;
  for (const auto& atom : atoms_)
    d = d + atom.line.divisor().pullback(curve_, atom.offset).scaled(atom.exponent);
  return d;
}

TrackedFunction TrackedFunction::operator*(const TrackedFunction& o) const {
  require_same_curve(o);
  TrackedFunction f(curve_, constant_ * o.constant_);
  f.atoms_ = atoms_;
  f.atoms_.insert(f.atoms_.end(), o.atoms_.begin(), o.atoms_.end());
  f.canonicalize();
  return f;
}

TrackedFunction TrackedFunction::inverse() const { return pow(-1); }

TrackedFunction TrackedFunction::pow(i64 k) const {
  TrackedFunction f(curve_, constant_.pow(k));
  if (k == 0) return f;
  f.atoms_ = atoms_;
  for (auto& atom : f.atoms_) atom.exponent *= k;
  return f;
}

TrackedFunction TrackedFunction::scaled(const Fp& c) const {
  if (c.is_zero()) throw Error(ErrorCode::ZeroScale, "scaling by zero");
  TrackedFunction f = *this;
  f.constant_ = constant_ * c;
  return f;
}

TrackedFunction TrackedFunction::pullback(const CurvePoint& y) const {
  curve_.require(y);
  TrackedFunction f = *this;
  if (y.infinity) return f;
  for (auto& atom : f.atoms_) atom.offset = curve_.add(atom.offset, y);
  f.canonicalize();
  return f;
}

std::pair<i64, Fp> TrackedFunction::leading(const CurvePoint& pt) const {
  curve_.require(pt);
  i64 order = 0;
  Fp lead = constant_;
  for (const auto& atom : atoms_) {
    const CurvePoint q = curve_.add(pt, atom.offset);
    if (!q.infinity) {
      const Fp direct = atom.line.value_at(q);
      if (!direct.is_zero()) {
        lead *= direct.pow(atom.exponent);
        continue;
      }
    }
    const auto series =
        line_series(curve_, atom.line, formal_translate(curve_, q, generic_point(curve_)));
    order += atom.exponent * series.valuation();
    lead *= series.leading().pow(atom.exponent);
  }
  return {order, lead};
}

Fp TrackedFunction::eval(const CurvePoint& pt) const {
  const auto [order, lead] = leading(pt);
  if (order != 0)
    throw Error(ErrorCode::EvalAtSupport, (order > 0 ? "zero" : "pole") + std::string(" at ") + pt.str());
  return lead;
}

TrackedFunction line_function(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  return TrackedFunction::from_line(curve, line_through(curve, p, q));
}

TrackedFunction fn_mul(const TrackedFunction& f, const TrackedFunction& g) { return f * g; }
TrackedFunction fn_inv(const TrackedFunction& f) { return f.inverse(); }
Fp fn_eval(const TrackedFunction& f, const CurvePoint& pt) { return f.eval(pt); }
TrackedFunction translate_pullback(const TrackedFunction& f, const CurvePoint& y) {
  return f.pullback(y);
}

std::vector<CurvePoint> sample_points(const Curve& curve, std::size_t count) {
  std::vector<CurvePoint> out;
  if (count == 0) return out;
  out.push_back(CurvePoint::at_infinity());
  for (i64 x = 0; x < curve.p() && out.size() < count; ++x) {
    const auto y = fp_sqrt(curve.rhs(curve.field(x)));
    if (!y) continue;
    out.push_back(CurvePoint::affine(x, y->value()));
    if (!y->is_zero() && out.size() < count) out.push_back(CurvePoint::affine(x, (-*y).value()));
  }
  return out;
}

std::optional<Fp> constant_ratio(const TrackedFunction& f, const TrackedFunction& g) {
  const TrackedFunction q = f * g.inverse();
  if (!q.divisor().empty()) return std::nullopt;
  if (q.is_constant()) return q.scale();
  std::optional<Fp> value;
  for (const auto& pt : sample_points(f.curve(), kRatioSamples)) {
    const Fp v = q.eval(pt);
    if (value && *value != v) return std::nullopt;
    value = v;
  }
  return value;
}

bool fn_equal(const TrackedFunction& f, const TrackedFunction& g) {
  const auto r = constant_ratio(f, g);
  return r && r->value() == 1;
}

}  // namespace jordan
