#pragma once

#include <cstdint>
#include <optional>

#include "jordan/curve.hpp"
#include "jordan/function.hpp"

namespace jordan {

/// Least affine point outside the support of d, if any.
std::optional<CurvePoint> reference_point(const Curve& curve, const Divisor& d);

/*
 * Function with divisor n(P) - n(O), built by double-and-add from line
 * functions, then scaled so it equals 1 at the reference point of its
 * divisor. Throws NotTorsion unless nP = O and P != O.
 */
TrackedFunction miller_function(const Curve& curve, i64 n, const CurvePoint& p);

/// Same divisor, scaled to be monic at O in the uniformizer z = -x/y.
TrackedFunction miller_function_monic(const Curve& curve, i64 n, const CurvePoint& p);

inline constexpr int kWeilRetries = 16;

/*
 * e_n(P, Q) = f_P(Q + U) f_Q(-U) / (f_P(U) f_Q(P - U))  for a random offset U
 * with both divisors (P) - (O), (Q + U) - (U) disjoint. Retries up to
 * kWeilRetries offsets, then throws DegenerateAfterRetries.
 */
Fp weil_pairing_offsets(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                        std::uint64_t seed);

/// e_n(P, Q) = (-1)^n f_P(Q) / f_Q(P) with monic Miller functions; needs no
/// auxiliary points, so it also works on curves too small for random offsets.
Fp weil_pairing_monic(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n);

/*
 * Weil pairing as a root of unity against the fixed generator
 * primitive_root_of_unity(p, n) of mu_n in F_p^*. Uses random offsets; on
 * curves where no offset avoids the supports it uses the monic formula.
 * Throws NotTorsion when P or Q is outside E[n].
 */
RootOfUnity weil_pairing(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                         std::uint64_t seed = 0);

/// Field value of weil_pairing.
Fp weil_pairing_value(const Curve& curve, const CurvePoint& p, const CurvePoint& q, i64 n,
                      std::uint64_t seed = 0);

}  // namespace jordan
