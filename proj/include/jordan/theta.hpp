#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/function.hpp"
#include "jordan/heisenberg.hpp"

namespace jordan {

/*
 * Element (x, [f]) of the theta group of L^n, L = O(D) with D = (O):
 * x in E[n] and div f = n(O) - n(-x)  (= nD - T_x^* nD).
 * The constant in f is genuine data: it is the central part of the element.
 */
struct ThetaElement {
  i64 level = 1;
  CurvePoint x;
  TrackedFunction f;
};

/// H(L) and H(L^n) for D = (O).
struct HofL {
  i64 level = 1;
  std::vector<CurvePoint> base;      // H(L) = { x : (O) ~ (-x) }
  std::vector<CurvePoint> elements;  // H(L^n) = { x : n x in H(L) }
};

/// Throws NotAdmissible unless #H(L^n) = n^2.
HofL h_of_level(const Curve& curve, i64 n);

/// (x, scale / f_{n,-x}); (O, scale) when x = O. Throws NotTorsion, ZeroScale.
ThetaElement theta_make(const Curve& curve, i64 n, const CurvePoint& x, const Fp& scale);
ThetaElement theta_identity(const Curve& curve, i64 n);

/// (x, [f]) (y, [h]) = (x + y, [T_x^* h * f]). Throws LevelMismatch.
ThetaElement theta_mul(const ThetaElement& g, const ThetaElement& h);
/// (-x, [T_{-x}^* (1/f)]).
ThetaElement theta_inv(const ThetaElement& g);
ThetaElement theta_pow(const ThetaElement& g, i64 k);

/// Same point and same function.
bool theta_equal(const ThetaElement& g, const ThetaElement& h);

/// Constant value of the function part of g h g^-1 h^-1.
/// Throws LevelMismatch, NonConstantCommutator.
Fp theta_commutator(const ThetaElement& g, const ThetaElement& h);

/// Lexicographically least (P, Q) in E[n] with e_n(P, Q) primitive.
/// Throws NotAdmissible.
std::pair<CurvePoint, CurvePoint> symplectic_basis(const Curve& curve, i64 n);

/*
 * Coordinates identifying the mu_n sublayer of the theta group with
 * G^1_{(n)}: a symplectic basis (P, Q) of E[n] together with lifts of exact
 * order n. The sections s(i, j) = lift_p^i lift_q^j cover E[n], and
 *
 *   w^c s(i, j)  <->  (zeta^(c + i j), i, chi^j),   w = [lift_p, lift_q],
 *
 * is a group isomorphism onto G^1_{(n)}.
 *
 * Over F_p an order-n lift need not exist (its n-th power is a scalar that
 * must be an n-th power in F_p^*); the basis is therefore the least symplectic
 * pair whose points both admit such lifts.
 */
struct LevelStructure {
  Curve curve;
  i64 n = 1;
  CurvePoint p;
  CurvePoint q;
  ThetaElement lift_p;
  ThetaElement lift_q;
  Fp commutator;  // w, a primitive n-th root of unity
  std::vector<CurvePoint> torsion;
  std::map<CurvePoint, std::pair<i64, i64>> coords;  // x = iP + jQ
  std::vector<ThetaElement> sections;                // s(i, j) at i * n + j

  const ThetaElement& section(i64 i, i64 j) const {
    return sections[static_cast<std::size_t>(i * n + j)];
  }
};

/// Scale c with (x, c / f_{n,-x}) of exact order dividing n, if one exists.
std::optional<Fp> order_n_scale(const Curve& curve, i64 n, const CurvePoint& x);

/// Throws NotAdmissible.
LevelStructure level_structure(const Curve& curve, i64 n);

/// True when level_structure succeeds (full n-torsion and order-n lifts).
bool has_level_subgroup(const Curve& curve, i64 n);

/// Curves from curve_search(n, p_max) that carry a level structure.
std::vector<Curve> theta_curve_search(i64 n, i64 p_max, std::size_t limit = 0);

/// Throws BasisMismatch, ScaleNotRootOfUnity.
HeisElement theta_to_heisenberg(const ThetaElement& g, const LevelStructure& ls);
ThetaElement heisenberg_to_theta(const HeisElement& h, const LevelStructure& ls);

inline constexpr i64 kDefaultThetaLevelBudget = 4;

/// All n^3 elements w^c s(i, j), ordered by their G^1 index; closure under
/// theta_mul is asserted. Throws BudgetExceeded when n > level_budget.
std::vector<ThetaElement> theta_enumerate_mu(const LevelStructure& ls,
                                             i64 level_budget = kDefaultThetaLevelBudget);

/*
 * sigma in {+1, -1} with  [lift_p, lift_q] = e_n(P, Q)^sigma. For n <= 2 both
 * signs agree and +1 is reported.
 */
int orientation_sigma(const LevelStructure& ls);

}  // namespace jordan
