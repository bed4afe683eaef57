#include <doctest.h>

#include <set>

#include "quasikoorn/epoly.hpp"
#include "quasikoorn/errors.hpp"
#include "quasikoorn/json_io.hpp"
#include "quasikoorn/verify.hpp"

using namespace quasikoorn;

namespace {

Point pt(std::initializer_list<std::pair<long, long>> xs)
{
    Point y;
    for (const auto &[n, d] : xs) {
        y.emplace_back(n, d);
    }
    return y;
}

ParamSpec sample_params(int rank)
{
    ParamSpec p;
    p.rank = rank;
    p.sqrt_q = Rational(3);
    p.k0 = Rational(2);
    p.u0 = Rational(5, 3);
    p.k = Rational(7, 2);
    p.kr = Rational(4, 3);
    p.ur = Rational(-5);
    return p;
}

void check_eigenfunction(const RepContext &ctx, const EPolynomial &e)
{
    CHECK(e.poly.coeff(e.degree) == Rational(1));
    const Leading lead = degree_and_leading(e.poly);
    CHECK(lead.degree == e.degree);
    const auto lower = lower_set(e.degree);
    const std::set<Point> members(lower.begin(), lower.end());
    for (const auto &[z, c] : e.poly.terms()) {
        CHECK(members.count(z) == 1);
    }
    CHECK(e.eigenvalues == gamma_all(ctx, e.degree));
    for (int i = 1; i <= ctx.params.rank; ++i) {
        CHECK(Y_op(i, ctx, e.poly) == e.poly.scale(e.eigenvalues[i - 1]));
    }
}

} // namespace

TEST_CASE("E of the basepoint is the monomial")
{
    RandomSource src(3);
    for (int n = 0; n < 15; ++n) {
        const int r = 1 + n % 3;
        const RepContext ctx = src.context(src.params(r));
        const EPolynomial e = compute_E(ctx, ctx.orbit.basepoint);
        CHECK(e.poly == QuasiPolynomial::mono(ctx.orbit.basepoint));
        CHECK(e.eigenvalues == gamma_all(ctx, ctx.orbit.basepoint));
    }
}

TEST_CASE("E of zero is the constant")
{
    for (int r = 1; r <= 3; ++r) {
        const ParamSpec params = sample_params(r);
        const RepContext ctx = integral_context(params);
        const Point zero(static_cast<std::size_t>(r), Rational(0));
        const EPolynomial e = compute_E(ctx, zero);
        CHECK(e.poly == QuasiPolynomial::mono(zero));
        for (int i = 1; i <= r; ++i) {
            CHECK(e.eigenvalues[i - 1] == params.k0 * params.kr * pow(params.k, 2 * (r - i)));
        }
    }
}

TEST_CASE("rank one agrees with the polynomial-representation oracle")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        RandomSource src(seed);
        const ParamSpec params = src.params(1);
        const RepContext ctx = integral_context(params);
        for (std::int64_t mu = -3; mu <= 3; ++mu) {
            const EPolynomial e = compute_E(ctx, to_point(IntVec{mu}));
            for (const auto &[z, c] : e.poly.terms()) {
                CHECK(z[0].is_integer());
            }
            CHECK(e.poly == koornwinder_oracle(params, mu, 5));
            check_eigenfunction(ctx, e);
        }
    }
    CHECK(koornwinder_oracle(sample_params(1), 0, 2) == QuasiPolynomial::mono(pt({{0, 1}})));
    CHECK_THROWS_AS(koornwinder_oracle(sample_params(2), 0, 2), DimensionMismatch);
}

TEST_CASE("support of E_{-1} in rank one")
{
    const ParamSpec params = sample_params(1);
    const EPolynomial e = compute_E(integral_context(params), pt({{-1, 1}}));
    for (const auto &[z, c] : e.poly.terms()) {
        CHECK((z == pt({{-1, 1}}) || z == pt({{0, 1}}) || z == pt({{1, 1}})));
    }
}

TEST_CASE("quasi-polynomial E in rank two")
{
    RandomSource src(4);
    const ParamSpec params = sample_params(2);
    const Orbit half = orbit_of(pt({{1, 2}, {1, 4}}));
    const RepContext ctx = make_context(params, half, src.torus_point(params, half));
    for (const auto &y : orbit_points_up_to(half, 4)) {
        const EPolynomial e = compute_E(ctx, y);
        check_eigenfunction(ctx, e);
        const EPolynomial other = compute_E(ctx, y, {ExtensionOrder::LengthRevLex, PivotChoice::LargestIndex});
        CHECK(other.poly == e.poly);
    }
}

TEST_CASE("integral E have integral exponents")
{
    const ParamSpec params = sample_params(2);
    const RepContext ctx = integral_context(params);
    for (const auto &y : orbit_points_up_to(ctx.orbit, 4)) {
        const EPolynomial e = compute_E(ctx, y);
        for (const auto &[z, c] : e.poly.terms()) {
            CHECK(z[0].is_integer());
            CHECK(z[1].is_integer());
        }
    }
}

TEST_CASE("eigenvalue collisions are reported")
{
    ParamSpec params;
    params.rank = 1;
    const RepContext ctx = integral_context(params);
    CHECK_THROWS_AS(compute_E(ctx, pt({{1, 1}})), NonGenericParameters);
}

TEST_CASE("compute_E input validation")
{
    const RepContext ctx = integral_context(sample_params(2));
    CHECK_THROWS_AS(compute_E(ctx, pt({{1, 2}, {0, 1}})), OrbitMismatch);
    CHECK_THROWS_AS(compute_E(ctx, pt({{0, 1}})), DimensionMismatch);
}

TEST_CASE("batch computation")
{
    const ParamSpec params = sample_params(1);
    const RepContext ctx = integral_context(params);
    const auto zero = batch_E(ctx, 0);
    REQUIRE(zero.size() == 1);
    REQUIRE(zero[0].result.has_value());
    CHECK(zero[0].result->poly == QuasiPolynomial::mono(pt({{0, 1}})));

    const auto two = batch_E(ctx, 2);
    std::vector<Point> degrees;
    for (const auto &item : two) {
        CHECK(item.result.has_value());
        degrees.push_back(item.degree);
    }
    CHECK(degrees == std::vector<Point>{pt({{0, 1}}), pt({{1, 1}}), pt({{-1, 1}})});

    const auto more = batch_E(integral_context(sample_params(2)), 3);
    std::set<Point> distinct;
    for (const auto &item : more) {
        CHECK(item.error.empty());
        CHECK(point_length(item.degree) <= 3);
        distinct.insert(item.degree);
    }
    CHECK(distinct.size() == more.size());

    ParamSpec flat;
    flat.rank = 1;
    const auto failing = batch_E(integral_context(flat), 2);
    REQUIRE(failing.size() == 3);
    CHECK(failing[0].result.has_value());
    CHECK_FALSE(failing[1].result.has_value());
    CHECK_FALSE(failing[1].error.empty());
}

TEST_CASE("E-polynomial json")
{
    const RepContext ctx = integral_context(sample_params(1));
    const EPolynomial e = compute_E(ctx, pt({{-1, 1}}));
    const Json doc = epoly_to_json(e);
    CHECK(doc["degree"] == Json::array({"-1"}));
    CHECK(doc["orbit_basepoint"] == Json::array({"0"}));
    CHECK(doc["facet"] == Json::array({1}));
    CHECK(doc["eigenvalues"].size() == 1);
    CHECK(quasipoly_from_json(doc["terms"]) == e.poly);
    CHECK(doc["terms"].back()["exponent"] == Json::array({"-1"}));
}
