#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "quasikoorn/errors.hpp"
#include "quasikoorn/weyl.hpp"

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

AffineWeylElement random_element(std::mt19937_64 &rng, int rank, int max_word)
{
    std::uniform_int_distribution<int> len(0, max_word);
    std::uniform_int_distribution<int> gen(0, rank);
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (auto &j : word) {
        j = gen(rng);
    }
    return AffineWeylElement::from_word(word, rank);
}

Point random_point(std::mt19937_64 &rng, int rank)
{
    std::uniform_int_distribution<long> num(-24, 24);
    std::uniform_int_distribution<long> den(1, 8);
    Point y;
    for (int i = 0; i < rank; ++i) {
        y.emplace_back(num(rng), den(rng));
    }
    return y;
}

Point small_point(std::mt19937_64 &rng, int rank)
{
    std::uniform_int_distribution<long> den(1, 8);
    Point y;
    for (int i = 0; i < rank; ++i) {
        const long d = den(rng);
        y.emplace_back(std::uniform_int_distribution<long>(-3 * d / 2, 3 * d / 2)(rng), d);
    }
    return y;
}

/// #{a > 0 : a(y) < 0} over enough levels.
int negative_roots_at(const Point &y)
{
    Rational norm(0);
    for (const auto &x : y) {
        norm = std::max(norm, x.sign() < 0 ? -x : x);
    }
    const std::int64_t levels = 2 * rational_floor(norm) + 3;
    int count = 0;
    for (const auto &a : oracle::affine_roots(static_cast<int>(y.size()), levels)) {
        if (a.is_positive() && a(y).sign() < 0) {
            ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("simple reflections")
{
    const auto s0 = AffineWeylElement::simple_reflection(0, 2);
    CHECK(s0.act(pt({{1, 4}, {0, 1}})) == pt({{3, 4}, {0, 1}}));
    const auto s2 = AffineWeylElement::simple_reflection(2, 2);
    CHECK(s2.act(pt({{1, 4}, {1, 3}})) == pt({{1, 4}, {-1, 3}}));
    const auto s1 = AffineWeylElement::simple_reflection(1, 2);
    CHECK(s1.act(pt({{1, 4}, {1, 3}})) == pt({{1, 3}, {1, 4}}));
    std::mt19937_64 rng(5);
    for (int r = 1; r <= 4; ++r) {
        for (int j = 0; j <= r; ++j) {
            const auto s = AffineWeylElement::simple_reflection(j, r);
            CHECK((s * s).is_identity());
            const Point y = random_point(rng, r);
            CHECK(s.act(s.act(y)) == y);
        }
    }
    CHECK_THROWS_AS(AffineWeylElement::simple_reflection(3, 2), IndexOutOfRange);
    CHECK_THROWS_AS(AffineWeylElement::simple_reflection(-1, 2), IndexOutOfRange);
}

TEST_CASE("action on points")
{
    const Point y = pt({{1, 4}, {1, 3}});
    CHECK(AffineWeylElement::identity(2).act(y) == y);
    const AffineWeylElement tau({1, 0}, SignedPermutation::identity(2));
    CHECK(tau.act(y) == pt({{5, 4}, {1, 3}}));
    CHECK(AffineWeylElement::simple_reflection(0, 2).act(pt({{1, 2}, {0, 1}})) == pt({{1, 2}, {0, 1}}));
    CHECK_THROWS_AS(tau.act(pt({{1, 1}})), DimensionMismatch);
}

TEST_CASE("group law")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        const int r = 1 + n % 3;
        const auto a = random_element(rng, r, 8);
        const auto b = random_element(rng, r, 8);
        const auto c = random_element(rng, r, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inverse()).is_identity());
        CHECK((a.inverse() * a).is_identity());
        const Point y = random_point(rng, r);
        CHECK((a * b).act(y) == a.act(b.act(y)));
    }
    CHECK(SignedPermutation::all(3).size() == 48);
    CHECK(SignedPermutation::all(4).size() == 384);
}

TEST_CASE("action on roots")
{
    const AffineRoot a0 = simple_root(0, 2);
    CHECK(a0 == AffineRoot{{-2, 0}, 1});
    const AffineWeylElement tau({1, 0}, SignedPermutation::identity(2));
    CHECK(tau.act(a0) == AffineRoot{{-2, 0}, 3});
    CHECK(AffineWeylElement::simple_reflection(0, 2).act(a0) == -a0);
    for (const auto &a : oracle::affine_roots(2, 2)) {
        CHECK(AffineWeylElement::identity(2).act(a) == a);
    }

    std::mt19937_64 rng(3);
    for (int n = 0; n < 100; ++n) {
        const int r = 1 + n % 3;
        const auto g = random_element(rng, r, 10);
        for (const auto &a : oracle::affine_roots(r, 1)) {
            const AffineRoot b = g.act(a);
            CHECK(b.is_valid());
            CHECK(g.act(-a) == -b);
            CHECK(g.act_inverse(b) == a);
            CHECK(g.inverse().act(a) == g.act_inverse(a));
            const Point y = random_point(rng, r);
            // (g a)(g y) = a(y)
            CHECK(b(g.act(y)) == a(y));
        }
    }
}

TEST_CASE("alpha values")
{
    const Point y = pt({{1, 3}, {1, 5}});
    CHECK(alpha_value(0, y) == Rational(1, 3));
    CHECK(alpha_value(1, y) == Rational(2, 15));
    CHECK(alpha_value(2, y) == Rational(2, 5));
    for (int j = 0; j <= 2; ++j) {
        CHECK(alpha_value(j, y) == simple_root(j, 2)(y));
    }
}

TEST_CASE("length and reduced words")
{
    CHECK(length(AffineWeylElement::identity(2)) == 0);
    CHECK(reduced_word(AffineWeylElement::identity(2)).empty());
    CHECK(reduced_word(AffineWeylElement::simple_reflection(0, 2)) == std::vector<int>{0});
    const AffineWeylElement tau({1, 0}, SignedPermutation::identity(2));
    CHECK(length(tau) == 4);
    CHECK(oracle::inversion_count(tau) == 4);

    std::mt19937_64 rng(17);
    for (int n = 0; n < 150; ++n) {
        const int r = 1 + n % 3;
        const auto g = random_element(rng, r, 9);
        const auto word = reduced_word(g);
        CHECK(AffineWeylElement::from_word(word, r) == g);
        CHECK(static_cast<int>(word.size()) == oracle::inversion_count(g));
        for (int j = 0; j <= r; ++j) {
            const int lg = length(g);
            const int ls = length(AffineWeylElement::simple_reflection(j, r) * g);
            const bool up = g.act_inverse(simple_root(j, r)).is_positive();
            CHECK(ls == lg + (up ? 1 : -1));
            CHECK(is_left_descent(g, j) == !up);
        }
    }
}

TEST_CASE("bruhat order agrees with the subword criterion")
{
    const auto elements = oracle::elements_up_to(2, 4);
    std::vector<std::set<AffineWeylElement>> below;
    for (const auto &[v, len] : elements) {
        CHECK(length(v) == len);
        below.push_back(oracle::subword_products(reduced_word(v), 2));
    }
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
            const bool expected = below[b].count(elements[a].first) > 0;
            CHECK(bruhat_leq(elements[a].first, elements[b].first) == expected);
        }
    }
    CHECK(bruhat_leq(AffineWeylElement::identity(2), elements.back().first));
}

TEST_CASE("bruhat order is a partial order")
{
    const auto elements = oracle::elements_up_to(2, 4);
    const std::size_t n = elements.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            leq[a][b] = bruhat_leq(elements[a].first, elements[b].first);
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        CHECK(leq[a][a]);
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b) {
                CHECK_FALSE((leq[a][b] && leq[b][a]));
            }
            if (!leq[a][b]) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (leq[b][c]) {
                    CHECK(leq[a][c]);
                }
            }
        }
    }
}

TEST_CASE("interval below an element")
{
    std::mt19937_64 rng(23);
    for (int n = 0; n < 20; ++n) {
        const auto g = random_element(rng, 2, 6);
        const auto interval = bruhat_interval_below(g);
        const auto expected = oracle::subword_products(reduced_word(g), 2);
        CHECK(std::set<AffineWeylElement>(interval.begin(), interval.end()) == expected);
    }
}

TEST_CASE("minimal alcove representatives")
{
    const Point inside = pt({{1, 3}, {1, 5}});
    const AlcoveRep a = min_alcove_rep(inside);
    CHECK(a.g.is_identity());
    CHECK(a.c == inside);

    const AlcoveRep b = min_alcove_rep(pt({{3, 4}, {0, 1}}));
    CHECK(b.g == AffineWeylElement::simple_reflection(0, 2));
    CHECK(b.word == std::vector<int>{0});
    CHECK(b.c == pt({{1, 4}, {0, 1}}));

    std::mt19937_64 rng(29);
    for (int n = 0; n < 200; ++n) {
        const int r = 1 + n % 3;
        const Point y = random_point(rng, r);
        const AlcoveRep rep = min_alcove_rep(y);
        CHECK(in_closed_alcove(rep.c));
        CHECK(rep.g.act(rep.c) == y);
        CHECK(AffineWeylElement::from_word(rep.word, r) == rep.g);
        CHECK(length(rep.g) == static_cast<int>(rep.word.size()));
        CHECK(static_cast<int>(rep.word.size()) == negative_roots_at(y));

        const AlcoveDecomposition dec = alcove_decompose(y);
        CHECK(dec.c == rep.c);
        CHECK(dec.g.act(dec.c) == y);
    }
}

TEST_CASE("representatives of regular points")
{
    std::mt19937_64 rng(31);
    const Point c = pt({{3, 8}, {1, 4}, {1, 8}});
    for (int n = 0; n < 50; ++n) {
        const auto g = random_element(rng, 3, 10);
        const AlcoveRep rep = min_alcove_rep(g.act(c));
        CHECK(rep.c == c);
        CHECK(rep.g == g);
    }
}

TEST_CASE("orbits")
{
    const Orbit zero = orbit_of(pt({{0, 1}, {0, 1}, {0, 1}}));
    CHECK(zero.basepoint == pt({{0, 1}, {0, 1}, {0, 1}}));
    CHECK(zero.facet == std::vector<int>{1, 2, 3});
    CHECK(zero.finite_facet() == std::vector<int>{1, 2, 3});

    const Orbit regular = orbit_of(pt({{1, 3}, {1, 5}}));
    CHECK(regular.facet.empty());
    CHECK(regular.is_regular());

    const Orbit half = orbit_of(pt({{1, 2}, {0, 1}}));
    CHECK(half.basepoint == pt({{1, 2}, {0, 1}}));
    CHECK(half.facet == std::vector<int>{0, 2});
    CHECK(half.finite_facet() == std::vector<int>{2});

    CHECK(half.contains(pt({{-1, 2}, {3, 1}})));
    CHECK_FALSE(half.contains(pt({{1, 4}, {0, 1}})));
    CHECK(orbit_of(pt({{7, 4}, {-2, 1}})) == orbit_of(pt({{1, 4}, {0, 1}})));
}

TEST_CASE("lower sets")
{
    const Point c = pt({{1, 3}, {1, 5}});
    CHECK(lower_set(c) == std::vector<Point>{c});

    const Point mu = pt({{1, 1}, {0, 1}});
    const auto L = lower_set(mu);
    const AffineWeylElement g_mu = min_alcove_rep(mu).g;
    std::set<Point> expected;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            const Point z = pt({{a, 1}, {b, 1}});
            if (bruhat_leq(min_alcove_rep(z).g, g_mu)) {
                expected.insert(z);
            }
        }
    }
    CHECK(std::set<Point>(L.begin(), L.end()) == expected);
    CHECK(L.front() == pt({{0, 1}, {0, 1}}));
    CHECK(L.back() == mu);

    std::mt19937_64 rng(37);
    for (int n = 0; n < 30; ++n) {
        const Point y = small_point(rng, 2);
        const auto lower = lower_set(y);
        const std::set<Point> members(lower.begin(), lower.end());
        CHECK(members.count(y) == 1);
        CHECK(members.count(min_alcove_rep(y).c) == 1);
        CHECK(members.size() == lower.size());
        for (std::size_t a = 0; a < lower.size(); ++a) {
            CHECK(point_leq(lower[a], y));
            // sorted by a linear extension
            for (std::size_t b = 0; b < a; ++b) {
                CHECK_FALSE((point_leq(lower[a], lower[b]) && lower[a] != lower[b]));
            }
        }
        // downward closed
        for (const auto &z : lower) {
            for (const auto &w : lower_set(z)) {
                CHECK(members.count(w) == 1);
            }
        }
    }
}
