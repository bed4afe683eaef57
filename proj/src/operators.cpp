#include "quasikoorn/operators.hpp"

#include <numeric>
#include <string>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

namespace {

Rational chi_power(const Rational &base, bool on) { return on ? base : Rational(1); }

Rational hecke_difference(const Rational &k) { return k - k.inverse(); }

/// out += c * u^pre * (1 - u^{-n}) / (1 - u^step) * x^y, with
/// u = q^{half/2} x^dir.  n is a multiple of step.
void add_geometric(QuasiPolynomial &out, const Exponent &y, const Rational &c, const IntVec &dir, int half,
                   const ParamSpec *params, std::int64_t n, int step, int pre)
{
    if (n == 0 || c.is_zero()) {
        return;
    }
    std::int64_t first;
    std::int64_t last;
    Rational sign(1);
    if (n > 0) {
        first = -n;
        last = -step;
        sign = Rational(-1);
    } else {
        first = 0;
        last = -n - step;
    }
    const Rational base = sign * c;
    for (std::int64_t p = first; p <= last; p += step) {
        const std::int64_t power = p + pre;
        Exponent z = y;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (dir[i] != 0) {
                z[i] += Rational(static_cast<long>(power * dir[i]));
            }
        }
        if (half != 0 && power != 0) {
            out.add_term(z, base * q_power(*params, half * power));
        } else {
            out.add_term(z, base);
        }
    }
}

IntVec unit_vector(std::size_t r, std::size_t i, std::int64_t value)
{
    IntVec v(r, 0);
    v[i] = value;
    return v;
}

void check_orbit(const RepContext &ctx, const QuasiPolynomial &p)
{
    for (const auto &[y, c] : p.terms()) {
        if (y.size() != static_cast<std::size_t>(ctx.params.rank)) {
            throw DimensionMismatch("exponent of wrong length for the representation");
        }
        if (!ctx.orbit.contains(y)) {
            throw OrbitMismatch("exponent outside the orbit of the representation");
        }
    }
}

void check_index(int j, int lo, int r)
{
    if (j < lo || j > r) {
        throw IndexOutOfRange("generator index " + std::to_string(j) + " outside " + std::to_string(lo) + ".." +
                              std::to_string(r));
    }
}

/// (g t)^{e_i}.
Rational torus_coordinate(const ParamSpec &params, const AffineWeylElement &g, const TorusPoint &t, int i)
{
    const SignedPermutation &w = g.finite();
    int j = 0;
    while (w.image(j) != i) {
        ++j;
    }
    Rational value = w.sign(j) > 0 ? t[j] : t[j].inverse();
    const std::int64_t lambda = g.translation()[i];
    if (lambda != 0) {
        value *= q_power(params, 2 * lambda);
    }
    return value;
}

void nabla_mid_term(QuasiPolynomial &out, int i, const Exponent &y, const Rational &c)
{
    const std::size_t r = y.size();
    IntVec dir(r, 0);
    dir[i - 1] = 1;
    dir[i] = -1;
    add_geometric(out, y, c, dir, 0, nullptr, rational_floor(y[i - 1] - y[i]), 1, 0);
}

void nabla_r_term(QuasiPolynomial &out, bool odd, const Exponent &y, const Rational &c)
{
    const std::size_t r = y.size();
    const Rational twice = Rational(2) * y[r - 1];
    const IntVec dir = unit_vector(r, r - 1, 1);
    if (odd) {
        add_geometric(out, y, c, dir, 0, nullptr, floor_odd(twice) + 1, 2, 1);
    } else {
        add_geometric(out, y, c, dir, 0, nullptr, floor_even(twice), 2, 0);
    }
}

void nabla_0_term(QuasiPolynomial &out, const ParamSpec &params, bool odd, const Exponent &y, const Rational &c)
{
    const Rational twice = Rational(-2) * y[0];
    const IntVec dir = unit_vector(y.size(), 0, -1);
    if (odd) {
        add_geometric(out, y, c, dir, 1, &params, floor_odd(twice) + 1, 2, 1);
    } else {
        add_geometric(out, y, c, dir, 1, &params, floor_even(twice), 2, 0);
    }
}

QuasiPolynomial T_mid_unchecked(int i, const RepContext &ctx, const QuasiPolynomial &p)
{
    const Rational &k = ctx.params.k;
    const Rational dk = hecke_difference(k);
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        Exponent sy = y;
        std::swap(sy[i - 1], sy[i]);
        out.add_term(sy, c * chi_power(k, (y[i - 1] - y[i]).is_integer()));
        nabla_mid_term(out, i, y, c * dk);
    }
    return out;
}

QuasiPolynomial T_r_unchecked(const RepContext &ctx, const QuasiPolynomial &p)
{
    const ParamSpec &pr = ctx.params;
    const Rational dk = hecke_difference(pr.kr);
    const Rational du = hecke_difference(pr.ur);
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        const std::size_t r = y.size();
        const Rational twice = Rational(2) * y[r - 1];
        Exponent sy = y;
        sy[r - 1] = -sy[r - 1];
        out.add_term(sy, c * chi_power(pr.kr, is_even_integer(twice)) * chi_power(pr.ur, is_odd_integer(twice)));
        nabla_r_term(out, false, y, c * dk);
        nabla_r_term(out, true, y, c * du);
    }
    return out;
}

QuasiPolynomial T_0_unchecked(const RepContext &ctx, const QuasiPolynomial &p)
{
    const ParamSpec &pr = ctx.params;
    const Rational dk = hecke_difference(pr.k0);
    const Rational du = hecke_difference(pr.u0);
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        const AlcoveDecomposition dec = alcove_decompose(y);
        const Rational twice = Rational(2) * y[0];
        Exponent sy = y;
        sy[0] = -sy[0];
        const Rational factor = torus_coordinate(pr, dec.g, ctx.t, 0) *
                                chi_power(pr.k0, is_even_integer(twice)) * chi_power(pr.u0, is_odd_integer(twice));
        out.add_term(sy, c * factor);
        nabla_0_term(out, pr, false, y, c * dk);
        nabla_0_term(out, pr, true, y, c * du);
    }
    return out;
}

QuasiPolynomial T_unchecked(int j, const RepContext &ctx, const QuasiPolynomial &p)
{
    if (j == 0) {
        return T_0_unchecked(ctx, p);
    }
    if (j == ctx.params.rank) {
        return T_r_unchecked(ctx, p);
    }
    return T_mid_unchecked(j, ctx, p);
}

QuasiPolynomial T_inverse_unchecked(int j, const RepContext &ctx, const QuasiPolynomial &p)
{
    QuasiPolynomial out = T_unchecked(j, ctx, p);
    out -= p.scale(hecke_difference(hecke_parameter(j, ctx.params)));
    return out;
}

/// eta = chi_{Z>0} - chi_{Z<=0}.
int eta(const Rational &x)
{
    if (!x.is_integer()) {
        return 0;
    }
    return x.sign() > 0 ? 1 : -1;
}

} // namespace

void validate_torus_point(const ParamSpec &params, const Orbit &orbit, const TorusPoint &t)
{
    const int r = orbit.rank();
    if (t.rank() != r) {
        throw DimensionMismatch("torus point has rank " + std::to_string(t.rank()) + ", expected " + std::to_string(r));
    }
    for (const auto &x : t.coords) {
        if (x.is_zero()) {
            throw InvalidTorusPoint("torus point has a zero coordinate");
        }
    }
    for (const int j : orbit.facet) {
        if (j == 0 && t[0] != params.sqrt_q) {
            throw InvalidTorusPoint("t_1 must equal q^(1/2) on this orbit, got " + t[0].str());
        }
        if (j > 0 && j < r && t[j - 1] != t[j]) {
            throw InvalidTorusPoint("t_" + std::to_string(j) + " must equal t_" + std::to_string(j + 1) +
                                    " on this orbit");
        }
        if (j == r && !t[r - 1].is_one()) {
            throw InvalidTorusPoint("t_" + std::to_string(r) + " must equal 1 on this orbit, got " + t[r - 1].str());
        }
    }
}

std::optional<TorusPoint> default_torus_point(const ParamSpec &params, const Orbit &orbit)
{
    const int r = orbit.rank();
    std::vector<int> component(static_cast<std::size_t>(r));
    std::iota(component.begin(), component.end(), 0);
    for (int i = 1; i < r; ++i) {
        if (orbit.facet_contains(i)) {
            component[i] = component[i - 1];
        }
    }
    std::vector<std::optional<Rational>> pinned(static_cast<std::size_t>(r));
    if (orbit.facet_contains(0)) {
        pinned[component[0]] = params.sqrt_q;
    }
    if (orbit.facet_contains(r)) {
        pinned[component[r - 1]] = Rational(1);
    }
    TorusPoint t;
    for (int i = 0; i < r; ++i) {
        if (!pinned[component[i]]) {
            return std::nullopt;
        }
        t.coords.push_back(*pinned[component[i]]);
    }
    return t;
}

RepContext make_context(const ParamSpec &params, const Orbit &orbit, const TorusPoint &t)
{
    params.validate();
    if (orbit.rank() != params.rank) {
        throw DimensionMismatch("orbit rank differs from parameter rank");
    }
    validate_torus_point(params, orbit, t);
    return RepContext{params, orbit, t};
}

RepContext integral_context(const ParamSpec &params)
{
    const Point zero(static_cast<std::size_t>(params.rank), Rational(0));
    return make_context(params, orbit_of(zero), TorusPoint::unit(params.rank));
}

Rational multiplicity(const AffineRoot &a, bool half, const ParamSpec &params)
{
    if (!a.is_valid()) {
        throw std::invalid_argument("multiplicity: not a root of type C");
    }
    if (!a.is_long()) {
        return params.k;
    }
    if (a.level % 2 == 0) {
        return half ? params.ur : params.kr;
    }
    return half ? params.u0 : params.k0;
}

Rational hecke_parameter(int j, const ParamSpec &params)
{
    check_index(j, 0, params.rank);
    if (j == 0) {
        return params.k0;
    }
    return j == params.rank ? params.kr : params.k;
}

QuasiPolynomial nabla_mid(int i, const QuasiPolynomial &p)
{
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        check_index(i, 1, static_cast<int>(y.size()) - 1);
        nabla_mid_term(out, i, y, c);
    }
    return out;
}

QuasiPolynomial nabla_r_even(const QuasiPolynomial &p)
{
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        nabla_r_term(out, false, y, c);
    }
    return out;
}

QuasiPolynomial nabla_r_odd(const QuasiPolynomial &p)
{
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        nabla_r_term(out, true, y, c);
    }
    return out;
}

QuasiPolynomial nabla_0_even(const RepContext &ctx, const QuasiPolynomial &p)
{
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        nabla_0_term(out, ctx.params, false, y, c);
    }
    return out;
}

QuasiPolynomial nabla_0_odd(const RepContext &ctx, const QuasiPolynomial &p)
{
    QuasiPolynomial out;
    for (const auto &[y, c] : p.terms()) {
        nabla_0_term(out, ctx.params, true, y, c);
    }
    return out;
}

TorusPoint torus_act(const ParamSpec &params, const AffineWeylElement &g, const TorusPoint &t)
{
    if (g.rank() != t.rank()) {
        throw DimensionMismatch("torus_act: rank mismatch");
    }
    TorusPoint out;
    for (int i = 0; i < t.rank(); ++i) {
        out.coords.push_back(torus_coordinate(params, g, t, i));
    }
    return out;
}

QuasiPolynomial T_finite(int i, const RepContext &ctx, const QuasiPolynomial &p)
{
    check_index(i, 1, ctx.params.rank);
    check_orbit(ctx, p);
    return T_unchecked(i, ctx, p);
}

QuasiPolynomial T_affine(const RepContext &ctx, const QuasiPolynomial &p)
{
    check_orbit(ctx, p);
    return T_0_unchecked(ctx, p);
}

QuasiPolynomial apply_T(int j, const RepContext &ctx, const QuasiPolynomial &p)
{
    check_index(j, 0, ctx.params.rank);
    check_orbit(ctx, p);
    return T_unchecked(j, ctx, p);
}

QuasiPolynomial T_inverse(int j, const RepContext &ctx, const QuasiPolynomial &p)
{
    check_index(j, 0, ctx.params.rank);
    check_orbit(ctx, p);
    return T_inverse_unchecked(j, ctx, p);
}

QuasiPolynomial Y_op(int i, const RepContext &ctx, const QuasiPolynomial &p)
{
    const int r = ctx.params.rank;
    check_index(i, 1, r);
    check_orbit(ctx, p);
    QuasiPolynomial cur = p;
    for (int j = i; j <= r; ++j) {
        cur = T_unchecked(j, ctx, cur);
    }
    for (int j = r - 1; j >= 1; --j) {
        cur = T_unchecked(j, ctx, cur);
    }
    cur = T_unchecked(0, ctx, cur);
    for (int j = 1; j < i; ++j) {
        cur = T_inverse_unchecked(j, ctx, cur);
    }
    return cur;
}

TorusPoint s_frak(const RepContext &ctx)
{
    const ParamSpec &pr = ctx.params;
    const Point &c = ctx.orbit.basepoint;
    const int r = ctx.orbit.rank();
    TorusPoint out;
    for (int i = 0; i < r; ++i) {
        const Rational twice = Rational(2) * c[i];
        Rational value(1);
        if (is_even_integer(twice)) {
            value = (pr.k0 * pr.kr).inverse();
        } else if (is_odd_integer(twice)) {
            value = pr.u0 * pr.ur;
        }
        std::int64_t n = 0;
        for (int j = i + 1; j < r; ++j) {
            n += eta(c[i] - c[j]) + eta(c[i] + c[j]);
        }
        for (int j = 0; j < i; ++j) {
            n += eta(c[j] + c[i]) - eta(c[j] - c[i]);
        }
        out.coords.push_back(value * pow(pr.k, n));
    }
    return out;
}

Rational gamma(const RepContext &ctx, int i, const Point &y)
{
    check_index(i, 1, ctx.params.rank);
    return gamma_all(ctx, y)[static_cast<std::size_t>(i - 1)];
}

std::vector<Rational> gamma_all(const RepContext &ctx, const Point &y)
{
    if (y.size() != static_cast<std::size_t>(ctx.params.rank)) {
        throw DimensionMismatch("gamma: point of wrong length");
    }
    const AlcoveRep rep = min_alcove_rep(y);
    if (rep.c != ctx.orbit.basepoint) {
        throw OrbitMismatch("gamma: point outside the orbit of the representation");
    }
    const TorusPoint st = s_frak(ctx) * ctx.t;
    std::vector<Rational> out;
    for (int i = 0; i < ctx.params.rank; ++i) {
        out.push_back(torus_coordinate(ctx.params, rep.g, st, i).inverse());
    }
    return out;
}

std::vector<IntVec> finite_inversions(const SignedPermutation &w)
{
    std::vector<IntVec> out;
    for (auto &alpha : positive_finite_roots(w.rank())) {
        if (!gradient_is_positive(w.apply(alpha))) {
            out.push_back(std::move(alpha));
        }
    }
    return out;
}

Rational kappa(const RepContext &ctx, const SignedPermutation &w)
{
    const Point &c = ctx.orbit.basepoint;
    Rational out(1);
    for (const auto &alpha : finite_inversions(w)) {
        const AffineRoot a{alpha, 0};
        const Rational value = a(c);
        if (is_even_integer(value)) {
            out *= multiplicity(a, false, ctx.params);
        } else if (is_odd_integer(value)) {
            out /= multiplicity(a, true, ctx.params);
        }
    }
    return out;
}

} // namespace quasikoorn
