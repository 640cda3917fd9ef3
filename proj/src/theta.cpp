#include "jordan/theta.hpp"

#include "jordan/error.hpp"
#include "jordan/miller.hpp"

namespace jordan {

namespace {

void require_compatible(const ThetaElement& g, const ThetaElement& h) {
  if (g.level != h.level || !(g.f.curve() == h.f.curve()))
    throw Error(ErrorCode::LevelMismatch, "level " + std::to_string(g.level) + " on " +
                                              g.f.curve().str() + " vs level " +
                                              std::to_string(h.level) + " on " + h.f.curve().str());
}

Divisor expected_divisor(const Curve& curve, i64 n, const CurvePoint& x) {
  return Divisor::point(CurvePoint::at_infinity(), n) - Divisor::point(curve.neg(x), n);
}

void check_invariant(const ThetaElement& g) {
  const auto& curve = g.f.curve();
  if (!curve.mul(g.level, g.x).infinity || !(g.f.divisor() == expected_divisor(curve, g.level, g.x)))
    throw Error(ErrorCode::NonConstantCommutator,
                "theta element over " + g.x.str() + " has divisor " + g.f.divisor().str());
}

// value of a function with empty divisor; nullopt when it is not constant
std::optional<Fp> constant_value(const TrackedFunction& f) {
  if (!f.divisor().empty()) return std::nullopt;
  return constant_ratio(f, TrackedFunction::constant(f.curve(), f.curve().field(1)));
}

}  // namespace

HofL h_of_level(const Curve& curve, i64 n) {
  if (n < 1) throw Error(ErrorCode::NotAdmissible, "level must be positive");
  HofL h;
  h.level = n;
  const auto points = enumerate_points(curve);
  for (const auto& x : points) {
    const Divisor d = Divisor::point(CurvePoint::at_infinity()) - Divisor::point(curve.neg(x));
    if (is_principal(curve, d)) h.base.push_back(x);
  }
  for (const auto& x : points)
    if (std::binary_search(h.base.begin(), h.base.end(), curve.mul(n, x))) h.elements.push_back(x);
  if (static_cast<i64>(h.elements.size()) != n * n)
    throw Error(ErrorCode::NotAdmissible, curve.str() + " has " + std::to_string(h.elements.size()) +
                                              " points in H(L^" + std::to_string(n) + "), need " +
                                              std::to_string(n * n));
  return h;
}

ThetaElement theta_make(const Curve& curve, i64 n, const CurvePoint& x, const Fp& scale) {
  curve.require(x);
  if (n < 1 || !curve.mul(n, x).infinity)
    throw Error(ErrorCode::NotTorsion, x.str() + " is not in E[" + std::to_string(n) + "]");
  if (scale.is_zero()) throw Error(ErrorCode::ZeroScale, "theta element needs a nonzero scale");
  if (x.infinity) return {n, x, TrackedFunction::constant(curve, scale)};
  return {n, x, miller_function(curve, n, curve.neg(x)).inverse().scaled(scale)};
}

ThetaElement theta_identity(const Curve& curve, i64 n) {
  return theta_make(curve, n, CurvePoint::at_infinity(), curve.field(1));
}

ThetaElement theta_mul(const ThetaElement& g, const ThetaElement& h) {
  require_compatible(g, h);
  const auto& curve = g.f.curve();
  ThetaElement out{g.level, curve.add(g.x, h.x), h.f.pullback(g.x) * g.f};
  check_invariant(out);
  return out;
}

ThetaElement theta_inv(const ThetaElement& g) {
  const auto& curve = g.f.curve();
  const CurvePoint minus = curve.neg(g.x);
  return {g.level, minus, g.f.inverse().pullback(minus)};
}

ThetaElement theta_pow(const ThetaElement& g, i64 k) {
  ThetaElement base = k < 0 ? theta_inv(g) : g;
  if (k < 0) k = -k;
  ThetaElement acc = theta_identity(g.f.curve(), g.level);
  while (k > 0) {
    if (k & 1) acc = theta_mul(acc, base);
    base = theta_mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool theta_equal(const ThetaElement& g, const ThetaElement& h) {
  return g.level == h.level && g.x == h.x && fn_equal(g.f, h.f);
}

Fp theta_commutator(const ThetaElement& g, const ThetaElement& h) {
  require_compatible(g, h);
  const auto c = theta_mul(theta_mul(g, h), theta_mul(theta_inv(g), theta_inv(h)));
  if (!c.x.infinity)
    throw Error(ErrorCode::NonConstantCommutator, "commutator lies over " + c.x.str());
  const auto v = constant_value(c.f);
  if (!v) throw Error(ErrorCode::NonConstantCommutator, "commutator function is not constant");
  return *v;
}

std::pair<CurvePoint, CurvePoint> symplectic_basis(const Curve& curve, i64 n) {
  const auto tor = h_of_level(curve, n).elements;
  for (const auto& p : tor)
    for (const auto& q : tor)
      if (weil_pairing(curve, p, q, n).order() == n) return {p, q};
  throw Error(ErrorCode::NotAdmissible, "no symplectic basis of E[" + std::to_string(n) + "]");
}

std::optional<Fp> order_n_scale(const Curve& curve, i64 n, const CurvePoint& x) {
  const auto g = theta_make(curve, n, x, curve.field(1));
  const auto lambda = constant_value(theta_pow(g, n).f);
  if (!lambda) throw Error(ErrorCode::NonConstantCommutator, "n-th power is not central");
  const Fp target = lambda->inverse();
  for (i64 c = 1; c < curve.p(); ++c)
    if (curve.field(c).pow(n) == target) return curve.field(c);
  return std::nullopt;
}

LevelStructure level_structure(const Curve& curve, i64 n) {
  const auto torsion = h_of_level(curve, n).elements;

  std::map<CurvePoint, std::optional<Fp>> scales;
  auto scale_of = [&](const CurvePoint& x) -> const std::optional<Fp>& {
    auto it = scales.find(x);
    if (it == scales.end()) it = scales.emplace(x, order_n_scale(curve, n, x)).first;
    return it->second;
  };

  std::optional<std::pair<CurvePoint, CurvePoint>> basis;
  for (const auto& p : torsion) {
    if (!scale_of(p)) continue;
    for (const auto& q : torsion) {
      if (weil_pairing(curve, p, q, n).order() != n || !scale_of(q)) continue;
      basis.emplace(p, q);
      break;
    }
    if (basis) break;
  }
  if (!basis)
    throw Error(ErrorCode::NotAdmissible, curve.str() + " has no level-" + std::to_string(n) +
                                              " Heisenberg subgroup over F_p");

  const auto [p, q] = *basis;
  const auto lift_p = theta_make(curve, n, p, *scale_of(p));
  const auto lift_q = theta_make(curve, n, q, *scale_of(q));
  LevelStructure ls{curve, n, p, q, lift_p, lift_q, theta_commutator(lift_p, lift_q), torsion, {}, {}};
  if (n > 1 && ls.commutator.order() != n)
    throw Error(ErrorCode::NotAdmissible, "lift commutator is not a primitive root of unity");

  ls.sections.reserve(static_cast<std::size_t>(n * n));
  ThetaElement row = theta_identity(curve, n);
  for (i64 i = 0; i < n; ++i) {
    ThetaElement cur = row;
    for (i64 j = 0; j < n; ++j) {
      if (!ls.coords.emplace(cur.x, std::pair(i, j)).second)
        throw Error(ErrorCode::NotAdmissible, "basis does not generate E[n]");
      ls.sections.push_back(cur);
      cur = theta_mul(cur, ls.lift_q);
    }
    row = theta_mul(row, ls.lift_p);
  }
  return ls;
}

bool has_level_subgroup(const Curve& curve, i64 n) {
  try {
    (void)level_structure(curve, n);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAdmissible) return false;
    throw;
  }
}

std::vector<Curve> theta_curve_search(i64 n, i64 p_max, std::size_t limit) {
  return curve_search(n, p_max, limit, [n](const Curve& c) { return has_level_subgroup(c, n); });
}

HeisElement theta_to_heisenberg(const ThetaElement& g, const LevelStructure& ls) {
  if (g.level != ls.n || !(g.f.curve() == ls.curve))
    throw Error(ErrorCode::BasisMismatch, "element and basis disagree on curve or level");
  const auto it = ls.coords.find(g.x);
  if (it == ls.coords.end()) throw Error(ErrorCode::BasisMismatch, g.x.str() + " is not in E[n]");
  const auto [i, j] = it->second;
  const auto ratio = constant_ratio(g.f, ls.section(i, j).f);
  if (!ratio) throw Error(ErrorCode::BasisMismatch, "function is not a multiple of the section");
  const auto root = field_to_root(*ratio, ls.commutator, ls.n);
  if (!root)
    throw Error(ErrorCode::ScaleNotRootOfUnity,
                "scale " + std::to_string(ratio->value()) + " is not in mu_" + std::to_string(ls.n));
  const FinAbGroup k({ls.n});
  return {RootOfUnity(ls.n, root->exponent() + i * j), KElement{k, {i}}, Character{k, {j}}};
}

ThetaElement heisenberg_to_theta(const HeisElement& h, const LevelStructure& ls) {
  if (h.x.group.delta() != std::vector<i64>{ls.n})
    throw Error(ErrorCode::BasisMismatch, "Heisenberg element is not over delta = (n)");
  const i64 i = h.x.coords[0], j = h.ell.coords[0];
  const ThetaElement& s = ls.section(i, j);
  return {ls.n, s.x, s.f.scaled(ls.commutator.pow(h.a.exponent() - i * j))};
}

std::vector<ThetaElement> theta_enumerate_mu(const LevelStructure& ls, i64 level_budget) {
  if (ls.n > level_budget)
    throw Error(ErrorCode::BudgetExceeded, "level " + std::to_string(ls.n) + " exceeds budget " +
                                               std::to_string(level_budget));
  const HeisGroup g{FinAbGroup({ls.n})};
  std::vector<ThetaElement> out;
  for (std::uint32_t idx = 0; idx < g.order(); ++idx)
    out.push_back(heisenberg_to_theta(g.element(idx), ls));
  // closure: every product lands back in the sublayer
  for (const auto& a : out)
    for (const auto& b : out) (void)theta_to_heisenberg(theta_mul(a, b), ls);
  return out;
}

int orientation_sigma(const LevelStructure& ls) {
  const Fp e = weil_pairing_value(ls.curve, ls.p, ls.q, ls.n);
  if (ls.commutator == e) return 1;
  if (ls.commutator == e.inverse()) return -1;
  throw Error(ErrorCode::NonConstantCommutator,
              "theta commutator is neither e_n(P,Q) nor its inverse");
}

}  // namespace jordan
