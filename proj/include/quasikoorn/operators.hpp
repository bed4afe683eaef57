#pragma once

#include <optional>
#include <vector>

#include "quasikoorn/params.hpp"
#include "quasikoorn/quasipoly.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

/// Data fixing one quasi-polynomial representation: parameters, the orbit
/// the operators act on, and a torus point in T_O.
struct RepContext {
    ParamSpec params;
    Orbit orbit;
    TorusPoint t;
};

/// Throws InvalidTorusPoint unless t^{alpha_j^vee} = 1 for every j in J(O):
/// t_i = t_{i+1} for j = i < r, t_r = 1 for j = r, t_1 = q^{1/2} for j = 0.
void validate_torus_point(const ParamSpec &params, const Orbit &orbit, const TorusPoint &t);

/// The unique point of T_O, if the facet constraints pin every coordinate.
std::optional<TorusPoint> default_torus_point(const ParamSpec &params, const Orbit &orbit);

/// Validates parameters, dimensions and t.
RepContext make_context(const ParamSpec &params, const Orbit &orbit, const TorusPoint &t);

/// Orbit Z^r with t = 1.
RepContext integral_context(const ParamSpec &params);

/// Multiplicity k_a (half = false) or k_{a/2} (half = true) of an affine
/// root: short roots carry k, long roots carry k_r/u_r at even level and
/// k_0/u_0 at odd level.
Rational multiplicity(const AffineRoot &a, bool half, const ParamSpec &params);

/// Hecke parameter of the generator T_j: k_0, k or k_r.
Rational hecke_parameter(int j, const ParamSpec &params);

// Truncated divided differences.  The geometric quotients are expanded in
// closed form.
QuasiPolynomial nabla_mid(int i, const QuasiPolynomial &p);
QuasiPolynomial nabla_r_even(const QuasiPolynomial &p);
QuasiPolynomial nabla_r_odd(const QuasiPolynomial &p);
QuasiPolynomial nabla_0_even(const RepContext &ctx, const QuasiPolynomial &p);
QuasiPolynomial nabla_0_odd(const RepContext &ctx, const QuasiPolynomial &p);

/// (g t) for g = tau(lambda) w: (g t)^{e_i} = q^{lambda_i} t^{w^{-1} e_i}.
TorusPoint torus_act(const ParamSpec &params, const AffineWeylElement &g, const TorusPoint &t);

/// T_i for 1 <= i <= r.  Throws OrbitMismatch.
QuasiPolynomial T_finite(int i, const RepContext &ctx, const QuasiPolynomial &p);
/// T_0 on F[O].  Throws OrbitMismatch.
QuasiPolynomial T_affine(const RepContext &ctx, const QuasiPolynomial &p);
/// T_j for 0 <= j <= r.
QuasiPolynomial apply_T(int j, const RepContext &ctx, const QuasiPolynomial &p);
/// T_j^{-1} = T_j - (kappa_j - kappa_j^{-1}).
QuasiPolynomial T_inverse(int j, const RepContext &ctx, const QuasiPolynomial &p);

/// Y_i = T_{i-1}^{-1} ... T_1^{-1} T_0 T_1 ... T_{r-1} T_r T_{r-1} ... T_i.
QuasiPolynomial Y_op(int i, const RepContext &ctx, const QuasiPolynomial &p);

/// The torus point s^O of the orbit.
TorusPoint s_frak(const RepContext &ctx);

/// gamma_i(y) = ((g_y (s^O t))^{e_i})^{-1}, 1 <= i <= r.
Rational gamma(const RepContext &ctx, int i, const Point &y);
/// (gamma_1(y), ..., gamma_r(y)).
std::vector<Rational> gamma_all(const RepContext &ctx, const Point &y);

/// kappa_w = prod over alpha in Pi(w) of k_alpha^{chi_e(alpha(c))} k_{alpha/2}^{-chi_o(alpha(c))}.
Rational kappa(const RepContext &ctx, const SignedPermutation &w);

/// Finite roots alpha > 0 with w alpha < 0.
std::vector<IntVec> finite_inversions(const SignedPermutation &w);

} // namespace quasikoorn
