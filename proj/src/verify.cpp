#include "quasikoorn/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quasikoorn/errors.hpp"
#include "quasikoorn/polyrep.hpp"

namespace quasikoorn {

namespace {

std::string point_str(const Point &y)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < y.size(); ++i) {
        os << (i ? ", " : "") << y[i];
    }
    os << ')';
    return os.str();
}

/// Runs one check, turning library errors into failures.
template <typename F>
void guarded(RelationReport &report, const std::string &what, F &&check)
{
    bool ok = false;
    try {
        ok = check();
    } catch (const std::exception &e) {
        report.record(false, what + ": " + e.what());
        return;
    }
    report.record(ok, what);
}

/// c * (1 - u^{-n}) / (1 - u) * x^y with u = q^{half/2} x^dir, as a finite
/// geometric sum.
QuasiPolynomial single_quotient(const ParamSpec &params, const Exponent &y, const IntVec &dir, int half,
                                std::int64_t n)
{
    QuasiPolynomial out;
    std::int64_t lo = n > 0 ? -n : 0;
    std::int64_t hi = n > 0 ? -1 : -n - 1;
    const Rational sign(n > 0 ? -1 : 1);
    for (std::int64_t p = lo; p <= hi; ++p) {
        Exponent z = y;
        for (std::size_t i = 0; i < z.size(); ++i) {
            z[i] += Rational(static_cast<long>(p * dir[i]));
        }
        out.add_term(z, sign * pow(params.sqrt_q, half * p));
    }
    return out;
}

/// Collapsed form of T_j on one monomial, valid when k_0 = u_0 and k_r = u_r.
QuasiPolynomial collapsed_T(int j, const RepContext &ctx, const Exponent &y)
{
    const ParamSpec &pr = ctx.params;
    const std::size_t r = y.size();
    IntVec dir(r, 0);
    Rational value;
    Rational k;
    int half = 0;
    Exponent sy = y;
    Rational twist(1);
    if (j == 0) {
        value = Rational(-2) * y[0];
        k = pr.k0;
        dir[0] = -1;
        half = 1;
        sy[0] = -sy[0];
        twist = torus_act(pr, min_alcove_rep(y).g, ctx.t)[0];
    } else if (j == static_cast<int>(r)) {
        value = Rational(2) * y[r - 1];
        k = pr.kr;
        dir[r - 1] = 1;
        sy[r - 1] = -sy[r - 1];
    } else {
        value = y[j - 1] - y[j];
        k = pr.k;
        dir[j - 1] = 1;
        dir[j] = -1;
        std::swap(sy[j - 1], sy[j]);
    }
    QuasiPolynomial out = QuasiPolynomial::mono(sy, twist * (value.is_integer() ? k : Rational(1)));
    out += single_quotient(pr, y, dir, half, rational_floor(value)).scale(k - k.inverse());
    return out;
}

} // namespace

OperatorFamily standard_operators()
{
    return [](int j, const RepContext &ctx, const QuasiPolynomial &p) { return apply_T(j, ctx, p); };
}

QuasiPolynomial apply_word(const OperatorFamily &T, const std::vector<int> &word, const RepContext &ctx,
                           const QuasiPolynomial &p)
{
    QuasiPolynomial cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        cur = T(*it, ctx, cur);
    }
    return cur;
}

QuasiPolynomial Y_from_family(const OperatorFamily &T, int i, const RepContext &ctx, const QuasiPolynomial &p)
{
    const int r = ctx.params.rank;
    QuasiPolynomial cur = p;
    for (int j = i; j <= r; ++j) {
        cur = T(j, ctx, cur);
    }
    for (int j = r - 1; j >= 1; --j) {
        cur = T(j, ctx, cur);
    }
    cur = T(0, ctx, cur);
    for (int j = 1; j < i; ++j) {
        const Rational k = hecke_parameter(j, ctx.params);
        cur = T(j, ctx, cur) - cur.scale(k - k.inverse());
    }
    return cur;
}

// ---------------------------------------------------------------------------
// RandomSource

int RandomSource::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational RandomSource::scalar()
{
    while (true) {
        const long p = uniform(2, 9);
        const long q = uniform(1, 7);
        Rational x(uniform(0, 1) ? p : -p, q);
        if (x != Rational(1) && x != Rational(-1)) {
            return x;
        }
    }
}

ParamSpec RandomSource::params(int rank)
{
    ParamSpec p;
    p.rank = rank;
    p.sqrt_q = scalar();
    p.k0 = scalar();
    p.u0 = scalar();
    p.k = scalar();
    p.kr = scalar();
    p.ur = scalar();
    return p;
}

Point RandomSource::alcove_point(int rank)
{
    const int den = 2 * uniform(1, 4);
    std::vector<int> a(static_cast<std::size_t>(rank));
    for (auto &x : a) {
        x = uniform(0, den / 2);
    }
    std::sort(a.begin(), a.end(), std::greater<>());
    Point c;
    for (const int x : a) {
        c.emplace_back(x, den);
    }
    return c;
}

SignedPermutation RandomSource::finite_element(int rank)
{
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), engine_);
    std::vector<int> signs(static_cast<std::size_t>(rank));
    for (auto &s : signs) {
        s = uniform(0, 1) ? 1 : -1;
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

IntVec RandomSource::integer_vector(int rank, int bound)
{
    IntVec v(static_cast<std::size_t>(rank));
    for (auto &x : v) {
        x = uniform(-bound, bound);
    }
    return v;
}

Point RandomSource::orbit_point(const Orbit &orbit, int bound)
{
    const AffineWeylElement g(integer_vector(orbit.rank(), bound), finite_element(orbit.rank()));
    return g.act(orbit.basepoint);
}

TorusPoint RandomSource::torus_point(const ParamSpec &params, const Orbit &orbit)
{
    const int r = orbit.rank();
    TorusPoint t;
    for (int i = 0; i < r; ++i) {
        t.coords.push_back(scalar());
    }
    for (int i = 1; i < r; ++i) {
        if (orbit.facet_contains(i)) {
            t.coords[i] = t.coords[i - 1];
        }
    }
    auto pin = [&](int i, const Rational &value) {
        int lo = i;
        while (lo > 0 && orbit.facet_contains(lo)) {
            --lo;
        }
        int hi = i;
        while (hi + 1 < r && orbit.facet_contains(hi + 1)) {
            ++hi;
        }
        for (int k = lo; k <= hi; ++k) {
            t.coords[k] = value;
        }
    };
    if (orbit.facet_contains(0)) {
        pin(0, params.sqrt_q);
    }
    if (orbit.facet_contains(r)) {
        pin(r - 1, Rational(1));
    }
    return t;
}

RepContext RandomSource::context(const ParamSpec &params)
{
    const Orbit orbit = orbit_of(alcove_point(params.rank));
    return make_context(params, orbit, torus_point(params, orbit));
}

void RelationReport::record(bool ok, const std::string &what)
{
    ++checks;
    if (!ok) {
        if (failures == 0) {
            first_failure = what;
        }
        ++failures;
    }
}

// ---------------------------------------------------------------------------
// Relation checks

std::vector<RelationReport> check_hecke(const ParamSpec &params, const SuiteOptions &options, bool include_affine)
{
    const int r = params.rank;
    RandomSource rng(options.seed);
    std::vector<RelationReport> reports;
    for (int j = include_affine ? 0 : 1; j <= r; ++j) {
        reports.push_back(RelationReport{"hecke_T" + std::to_string(j)});
    }
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const Point y = rng.orbit_point(ctx.orbit, options.shift_bound);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        for (auto &report : reports) {
            const int j = std::stoi(report.name.substr(7));
            guarded(report, "x^" + point_str(y), [&] {
                const Rational k = hecke_parameter(j, params);
                const QuasiPolynomial tx = options.T(j, ctx, x);
                const QuasiPolynomial lhs = options.T(j, ctx, tx) + tx.scale(k.inverse() - k) - x;
                return lhs.is_zero();
            });
        }
    }
    return reports;
}

RelationReport check_finite_braid(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"braid_finite"};
    if (r < 2) {
        report.skipped = true;
        return report;
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
    for (int i = 1; i + 1 < r; ++i) {
        relations.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
    }
    relations.push_back({{r - 1, r, r - 1, r}, {r, r - 1, r, r - 1}});
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 2; j <= r; ++j) {
            relations.push_back({{i, j}, {j, i}});
        }
    }
    RandomSource rng(options.seed + 1);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const Point y = rng.orbit_point(ctx.orbit, options.shift_bound);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        for (const auto &[lhs, rhs] : relations) {
            guarded(report, "x^" + point_str(y), [&] {
                return apply_word(options.T, lhs, ctx, x) == apply_word(options.T, rhs, ctx, x);
            });
        }
    }
    return report;
}

RelationReport check_affine_braid(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"braid_affine"};
    if (r < 2) {
        report.skipped = true;
        return report;
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;
    relations.push_back({{0, 1, 0, 1}, {1, 0, 1, 0}});
    for (int i = 2; i <= r; ++i) {
        relations.push_back({{0, i}, {i, 0}});
    }
    RandomSource rng(options.seed + 2);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const Point y = rng.orbit_point(ctx.orbit, options.shift_bound);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        for (const auto &[lhs, rhs] : relations) {
            guarded(report, "x^" + point_str(y), [&] {
                return apply_word(options.T, lhs, ctx, x) == apply_word(options.T, rhs, ctx, x);
            });
        }
    }
    return report;
}

RelationReport check_y_commute(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"y_commute"};
    if (r < 2) {
        report.skipped = true;
        return report;
    }
    RandomSource rng(options.seed + 3);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const Point y = rng.orbit_point(ctx.orbit, 1);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        std::vector<QuasiPolynomial> single;
        for (int i = 1; i <= r; ++i) {
            single.push_back(Y_from_family(options.T, i, ctx, x));
        }
        for (int i = 1; i <= r; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                guarded(report, "[Y_" + std::to_string(i) + ", Y_" + std::to_string(j) + "] x^" + point_str(y), [&] {
                    return Y_from_family(options.T, i, ctx, single[j - 1]) ==
                           Y_from_family(options.T, j, ctx, single[i - 1]);
                });
            }
        }
    }
    return report;
}

RelationReport check_y_triangular(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"y_triangular"};
    RandomSource rng(options.seed + 4);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const Point y = rng.orbit_point(ctx.orbit, 1);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        const std::vector<Rational> expected = gamma_all(ctx, y);
        for (int i = 1; i <= r; ++i) {
            guarded(report, "Y_" + std::to_string(i) + " x^" + point_str(y), [&] {
                const Leading lead = degree_and_leading(Y_from_family(options.T, i, ctx, x));
                return lead.degree == y && lead.coeff == expected[i - 1];
            });
        }
    }
    return report;
}

RelationReport check_polynomial_reduction(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"polynomial_reduction"};
    const RepContext ctx = integral_context(params);
    RandomSource rng(options.seed + 5);
    for (int trial = 0; trial < options.trials; ++trial) {
        const IntVec mu = rng.integer_vector(r, 3);
        const QuasiPolynomial x = QuasiPolynomial::mono(to_point(mu));
        for (int j = 0; j <= r; ++j) {
            guarded(report, "T_" + std::to_string(j) + " x^" + point_str(to_point(mu)), [&] {
                return options.T(j, ctx, x) == to_quasi(poly_T(j, params, LaurentPoly::mono(mu)));
            });
        }
    }
    return report;
}

RelationReport check_parameter_collapse(const ParamSpec &params, const SuiteOptions &options)
{
    const int r = params.rank;
    RelationReport report{"parameter_collapse"};
    ParamSpec collapsed = params;
    collapsed.u0 = params.k0;
    collapsed.kr = params.k0;
    collapsed.ur = params.k0;
    RandomSource rng(options.seed + 6);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(collapsed);
        const Point y = rng.orbit_point(ctx.orbit, options.shift_bound);
        const QuasiPolynomial x = QuasiPolynomial::mono(y);
        for (int j = 0; j <= r; ++j) {
            guarded(report, "T_" + std::to_string(j) + " x^" + point_str(y),
                    [&] { return options.T(j, ctx, x) == collapsed_T(j, ctx, y); });
        }
    }
    return report;
}

namespace {

bool cyclic_identity_holds(const RepContext &ctx, const OperatorFamily &T, const SignedPermutation &w)
{
    const int r = ctx.params.rank;
    const AffineWeylElement g(IntVec(static_cast<std::size_t>(r), 0), w);
    const QuasiPolynomial lhs = apply_word(T, reduced_word(g), ctx, QuasiPolynomial::mono(ctx.orbit.basepoint));
    return lhs == QuasiPolynomial::mono(w.apply(ctx.orbit.basepoint), kappa(ctx, w));
}

} // namespace

RelationReport check_cyclic_kappa(const ParamSpec &params, const SuiteOptions &options)
{
    RelationReport report{"cyclic_kappa"};
    RandomSource rng(options.seed + 7);
    for (int trial = 0; trial < options.trials; ++trial) {
        const RepContext ctx = rng.context(params);
        const SignedPermutation w = rng.finite_element(params.rank);
        guarded(report, "orbit " + point_str(ctx.orbit.basepoint),
                [&] { return cyclic_identity_holds(ctx, options.T, w); });
    }
    return report;
}

RelationReport check_cyclic_kappa_all(const RepContext &ctx, const OperatorFamily &T)
{
    RelationReport report{"cyclic_kappa_all"};
    for (const auto &w : SignedPermutation::all(ctx.params.rank)) {
        guarded(report, "orbit " + point_str(ctx.orbit.basepoint), [&] { return cyclic_identity_holds(ctx, T, w); });
    }
    return report;
}

std::vector<RelationReport> run_verify_suite(const ParamSpec &params, const SuiteOptions &options)
{
    std::vector<RelationReport> out = check_hecke(params, options, true);
    out.push_back(check_finite_braid(params, options));
    out.push_back(check_affine_braid(params, options));
    out.push_back(check_y_commute(params, options));
    out.push_back(check_y_triangular(params, options));
    out.push_back(check_polynomial_reduction(params, options));
    out.push_back(check_parameter_collapse(params, options));
    out.push_back(check_cyclic_kappa(params, options));
    return out;
}

} // namespace quasikoorn
