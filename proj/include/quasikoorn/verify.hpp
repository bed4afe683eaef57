#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quasikoorn/operators.hpp"
#include "quasikoorn/params.hpp"
#include "quasikoorn/quasipoly.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

/// The generators T_0..T_r as a replaceable family, so a test can run the
/// relation suite against deliberately broken operators.
using OperatorFamily = std::function<QuasiPolynomial(int j, const RepContext &, const QuasiPolynomial &)>;

OperatorFamily standard_operators();

/// T_{w_1} ... T_{w_m} p, the rightmost letter applied first.
QuasiPolynomial apply_word(const OperatorFamily &T, const std::vector<int> &word, const RepContext &ctx,
                           const QuasiPolynomial &p);

/// Y_i built from an arbitrary family.
QuasiPolynomial Y_from_family(const OperatorFamily &T, int i, const RepContext &ctx, const QuasiPolynomial &p);

/// Seeded source of random test data.  Exponent denominators stay <= 8.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi);
    /// Nonzero rational p/q with 2 <= |p| <= 9, 1 <= q <= 7, never +-1.
    Rational scalar();
    ParamSpec params(int rank);
    /// Point of the closed alcove with denominator in {2, 4, 6, 8}; walls occur
    /// with positive probability.
    Point alcove_point(int rank);
    SignedPermutation finite_element(int rank);
    IntVec integer_vector(int rank, int bound);
    /// w c + lambda with |lambda_i| <= bound.
    Point orbit_point(const Orbit &orbit, int bound);
    /// Random point of T_O.
    TorusPoint torus_point(const ParamSpec &params, const Orbit &orbit);
    /// Random orbit with a random valid torus point.
    RepContext context(const ParamSpec &params);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct RelationReport {
    std::string name;
    int checks = 0;
    int failures = 0;
    bool skipped = false;
    std::string first_failure;

    bool passed() const { return failures == 0; }
    void record(bool ok, const std::string &what);
};

struct SuiteOptions {
    int trials = 50;
    std::uint64_t seed = 0;
    /// Bound on the translation part of random exponents.
    int shift_bound = 2;
    OperatorFamily T = standard_operators();
};

/// (T_j - kappa_j)(T_j + kappa_j^{-1}) = 0 for j = 0..r; one report per j.
std::vector<RelationReport> check_hecke(const ParamSpec &params, const SuiteOptions &options, bool include_affine);
RelationReport check_finite_braid(const ParamSpec &params, const SuiteOptions &options);
RelationReport check_affine_braid(const ParamSpec &params, const SuiteOptions &options);
RelationReport check_y_commute(const ParamSpec &params, const SuiteOptions &options);
/// Y_i x^y has degree y and leading coefficient gamma_i(y).
RelationReport check_y_triangular(const ParamSpec &params, const SuiteOptions &options);
/// On Z^r with t = 1, T_j agrees with the polynomial representation.
RelationReport check_polynomial_reduction(const ParamSpec &params, const SuiteOptions &options);
/// With k_0 = u_0 = k_r = u_r (taken from params.k0), each T_j equals its
/// single-quotient form.
RelationReport check_parameter_collapse(const ParamSpec &params, const SuiteOptions &options);
/// T_w x^c = kappa_w x^{w c} for random orbits and random w in W_0.
RelationReport check_cyclic_kappa(const ParamSpec &params, const SuiteOptions &options);
/// The same identity for every w in W_0 on one representation.
RelationReport check_cyclic_kappa_all(const RepContext &ctx, const OperatorFamily &T);

/// Every relation above, as run by the verify command.
std::vector<RelationReport> run_verify_suite(const ParamSpec &params, const SuiteOptions &options);

} // namespace quasikoorn
