#include "quasikoorn/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

Point to_point(const IntVec &v)
{
    Point out;
    out.reserve(v.size());
    for (const auto x : v) {
        out.emplace_back(static_cast<long>(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    if (perm_.size() != signs_.size()) {
        throw DimensionMismatch("signed permutation: perm and signs differ in length");
    }
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        const int p = perm_[i];
        if (p < 0 || p >= static_cast<int>(perm_.size()) || seen[p]) {
            throw std::invalid_argument("signed permutation: not a permutation");
        }
        seen[p] = true;
        if (signs_[i] != 1 && signs_[i] != -1) {
            throw std::invalid_argument("signed permutation: signs must be +-1");
        }
    }
}

SignedPermutation SignedPermutation::identity(int rank)
{
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(std::move(perm), std::vector<int>(static_cast<std::size_t>(rank), 1));
}

SignedPermutation SignedPermutation::generator(int i, int rank)
{
    if (i < 1 || i > rank) {
        throw IndexOutOfRange("finite generator index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    }
    SignedPermutation w = identity(rank);
    if (i < rank) {
        std::swap(w.perm_[i - 1], w.perm_[i]);
    } else {
        w.signs_[rank - 1] = -1;
    }
    return w;
}

SignedPermutation SignedPermutation::negate_first(int rank)
{
    SignedPermutation w = identity(rank);
    w.signs_[0] = -1;
    return w;
}

std::vector<SignedPermutation> SignedPermutation::all(int rank)
{
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << rank); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i) {
                signs[i] = (mask >> i) & 1u ? -1 : 1;
            }
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool SignedPermutation::is_identity() const
{
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) {
            return false;
        }
    }
    return true;
}

Point SignedPermutation::apply(const Point &y) const
{
    if (y.size() != perm_.size()) {
        throw DimensionMismatch("signed permutation applied to vector of wrong length");
    }
    Point out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[perm_[i]] = signs_[i] < 0 ? -y[i] : y[i];
    }
    return out;
}

IntVec SignedPermutation::apply(const IntVec &y) const
{
    if (y.size() != perm_.size()) {
        throw DimensionMismatch("signed permutation applied to vector of wrong length");
    }
    IntVec out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[perm_[i]] = signs_[i] * y[i];
    }
    return out;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation &other) const
{
    const std::size_t n = perm_.size();
    std::vector<int> perm(n);
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int p = other.perm_[i];
        perm[i] = perm_[p];
        signs[i] = other.signs_[i] * signs_[p];
    }
    SignedPermutation out;
    out.perm_ = std::move(perm);
    out.signs_ = std::move(signs);
    return out;
}

SignedPermutation SignedPermutation::inverse() const
{
    const std::size_t n = perm_.size();
    SignedPermutation out;
    out.perm_.resize(n);
    out.signs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.perm_[perm_[i]] = static_cast<int>(i);
        out.signs_[perm_[i]] = signs_[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Affine roots

Rational AffineRoot::operator()(const Point &y) const
{
    if (y.size() != gradient.size()) {
        throw DimensionMismatch("affine root evaluated at point of wrong length");
    }
    Rational out(static_cast<long>(level));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (gradient[i] != 0) {
            out += Rational(static_cast<long>(gradient[i])) * y[i];
        }
    }
    return out;
}

bool AffineRoot::is_valid() const
{
    int ones = 0;
    int twos = 0;
    for (const auto g : gradient) {
        if (g == 1 || g == -1) {
            ++ones;
        } else if (g == 2 || g == -2) {
            ++twos;
        } else if (g != 0) {
            return false;
        }
    }
    return (ones == 2 && twos == 0) || (ones == 0 && twos == 1);
}

bool AffineRoot::is_long() const
{
    return std::any_of(gradient.begin(), gradient.end(), [](auto g) { return g == 2 || g == -2; });
}

bool gradient_is_positive(const IntVec &gradient)
{
    for (const auto g : gradient) {
        if (g != 0) {
            return g > 0;
        }
    }
    return false;
}

bool AffineRoot::is_positive() const { return level > 0 || (level == 0 && gradient_is_positive(gradient)); }

AffineRoot AffineRoot::operator-() const
{
    AffineRoot out{gradient, -level};
    for (auto &g : out.gradient) {
        g = -g;
    }
    return out;
}

std::vector<IntVec> positive_finite_roots(int rank)
{
    const auto n = static_cast<std::size_t>(rank);
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            IntVec minus(n, 0);
            minus[i] = 1;
            minus[j] = -1;
            out.push_back(minus);
            IntVec plus(n, 0);
            plus[i] = 1;
            plus[j] = 1;
            out.push_back(plus);
        }
        IntVec twice(n, 0);
        twice[i] = 2;
        out.push_back(twice);
    }
    return out;
}

AffineRoot simple_root(int j, int rank)
{
    if (j < 0 || j > rank) {
        throw IndexOutOfRange("simple root index " + std::to_string(j) + " outside 0.." + std::to_string(rank));
    }
    AffineRoot a{IntVec(static_cast<std::size_t>(rank), 0), 0};
    if (j == 0) {
        a.gradient[0] = -2;
        a.level = 1;
    } else if (j < rank) {
        a.gradient[j - 1] = 1;
        a.gradient[j] = -1;
    } else {
        a.gradient[rank - 1] = 2;
    }
    return a;
}

Rational alpha_value(int j, const Point &y)
{
    const int r = static_cast<int>(y.size());
    if (j < 0 || j > r) {
        throw IndexOutOfRange("simple root index " + std::to_string(j) + " outside 0.." + std::to_string(r));
    }
    if (j == 0) {
        return Rational(1) - Rational(2) * y[0];
    }
    if (j < r) {
        return y[j - 1] - y[j];
    }
    return Rational(2) * y[r - 1];
}

// ---------------------------------------------------------------------------
// AffineWeylElement

AffineWeylElement::AffineWeylElement(IntVec translation, SignedPermutation finite)
    : translation_(std::move(translation)), finite_(std::move(finite))
{
    if (translation_.size() != static_cast<std::size_t>(finite_.rank())) {
        throw DimensionMismatch("affine Weyl element: translation and finite part differ in rank");
    }
}

AffineWeylElement AffineWeylElement::identity(int rank)
{
    return AffineWeylElement(IntVec(static_cast<std::size_t>(rank), 0), SignedPermutation::identity(rank));
}

AffineWeylElement AffineWeylElement::simple_reflection(int j, int rank)
{
    if (j < 0 || j > rank) {
        throw IndexOutOfRange("simple reflection index " + std::to_string(j) + " outside 0.." + std::to_string(rank));
    }
    if (j == 0) {
        IntVec shift(static_cast<std::size_t>(rank), 0);
        shift[0] = 1;
        return AffineWeylElement(std::move(shift), SignedPermutation::negate_first(rank));
    }
    return AffineWeylElement(IntVec(static_cast<std::size_t>(rank), 0), SignedPermutation::generator(j, rank));
}

AffineWeylElement AffineWeylElement::from_word(const std::vector<int> &word, int rank)
{
    AffineWeylElement g = identity(rank);
    for (const int j : word) {
        g = g * simple_reflection(j, rank);
    }
    return g;
}

bool AffineWeylElement::is_identity() const
{
    return finite_.is_identity() && std::all_of(translation_.begin(), translation_.end(), [](auto x) { return x == 0; });
}

Point AffineWeylElement::act(const Point &y) const
{
    Point out = finite_.apply(y);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (translation_[i] != 0) {
            out[i] += Rational(static_cast<long>(translation_[i]));
        }
    }
    return out;
}

namespace {

std::int64_t dot(const IntVec &a, const IntVec &b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

AffineRoot AffineWeylElement::act(const AffineRoot &a) const
{
    if (a.gradient.size() != translation_.size()) {
        throw DimensionMismatch("affine root of wrong rank");
    }
    IntVec grad = finite_.apply(a.gradient);
    const std::int64_t level = a.level - dot(grad, translation_);
    return AffineRoot{std::move(grad), level};
}

AffineRoot AffineWeylElement::act_inverse(const AffineRoot &a) const
{
    if (a.gradient.size() != translation_.size()) {
        throw DimensionMismatch("affine root of wrong rank");
    }
    const std::int64_t level = a.level + dot(a.gradient, translation_);
    return AffineRoot{finite_.inverse().apply(a.gradient), level};
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement &other) const
{
    IntVec shift = finite_.apply(other.translation_);
    for (std::size_t i = 0; i < shift.size(); ++i) {
        shift[i] += translation_[i];
    }
    return AffineWeylElement(std::move(shift), finite_ * other.finite_);
}

AffineWeylElement AffineWeylElement::inverse() const
{
    SignedPermutation winv = finite_.inverse();
    IntVec shift = winv.apply(translation_);
    for (auto &x : shift) {
        x = -x;
    }
    return AffineWeylElement(std::move(shift), std::move(winv));
}

// ---------------------------------------------------------------------------
// Length, reduced words, Bruhat order

bool is_left_descent(const AffineWeylElement &g, int j)
{
    return !g.act_inverse(simple_root(j, g.rank())).is_positive();
}

std::vector<int> reduced_word(const AffineWeylElement &g)
{
    const int r = g.rank();
    std::vector<int> word;
    AffineWeylElement cur = g;
    while (!cur.is_identity()) {
        int descent = -1;
        for (int j = 0; j <= r; ++j) {
            if (is_left_descent(cur, j)) {
                descent = j;
                break;
            }
        }
        if (descent < 0) {
            throw std::logic_error("non-identity affine Weyl element without left descent");
        }
        word.push_back(descent);
        cur = AffineWeylElement::simple_reflection(descent, r) * cur;
    }
    return word;
}

int length(const AffineWeylElement &g) { return static_cast<int>(reduced_word(g).size()); }

bool bruhat_leq(const AffineWeylElement &u_in, const AffineWeylElement &v_in)
{
    if (u_in.rank() != v_in.rank()) {
        throw DimensionMismatch("bruhat_leq: elements of different rank");
    }
    const int r = v_in.rank();
    AffineWeylElement u = u_in;
    AffineWeylElement v = v_in;
    int lu = length(u);
    int lv = length(v);
    while (true) {
        if (lu > lv) {
            return false;
        }
        if (lu == lv) {
            return u == v;
        }
        if (lu == 0) {
            return true;
        }
        int j = 0;
        while (!is_left_descent(v, j)) {
            ++j;
        }
        const AffineWeylElement s = AffineWeylElement::simple_reflection(j, r);
        v = s * v;
        --lv;
        if (is_left_descent(u, j)) {
            u = s * u;
            --lu;
        }
    }
}

namespace {

std::vector<AffineWeylElement> subword_products(const std::vector<int> &word, int rank)
{
    std::set<AffineWeylElement> seen{AffineWeylElement::identity(rank)};
    for (const int j : word) {
        const AffineWeylElement s = AffineWeylElement::simple_reflection(j, rank);
        const std::vector<AffineWeylElement> snapshot(seen.begin(), seen.end());
        for (const auto &x : snapshot) {
            seen.insert(x * s);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::vector<AffineWeylElement> bruhat_interval_below(const AffineWeylElement &g)
{
    return subword_products(reduced_word(g), g.rank());
}

// ---------------------------------------------------------------------------
// Alcove geometry and orbits

bool in_closed_alcove(const Point &y)
{
    const int r = static_cast<int>(y.size());
    for (int j = 0; j <= r; ++j) {
        if (alpha_value(j, y).sign() < 0) {
            return false;
        }
    }
    return true;
}

AlcoveRep min_alcove_rep(const Point &y)
{
    const int r = static_cast<int>(y.size());
    if (r == 0) {
        throw DimensionMismatch("min_alcove_rep: empty point");
    }
    AlcoveRep rep{AffineWeylElement::identity(r), y, {}};
    while (true) {
        int wall = -1;
        for (int j = 0; j <= r; ++j) {
            if (alpha_value(j, rep.c).sign() < 0) {
                wall = j;
                break;
            }
        }
        if (wall < 0) {
            return rep;
        }
        const AffineWeylElement s = AffineWeylElement::simple_reflection(wall, r);
        rep.c = s.act(rep.c);
        rep.g = rep.g * s;
        rep.word.push_back(wall);
    }
}

AlcoveDecomposition alcove_decompose(const Point &y)
{
    const std::size_t r = y.size();
    if (r == 0) {
        throw DimensionMismatch("alcove_decompose: empty point");
    }
    const Rational half(1, 2);
    IntVec shift(r);
    std::vector<int> signs(r);
    Point residue(r);
    for (std::size_t i = 0; i < r; ++i) {
        shift[i] = rational_floor(y[i] + half);
        Rational rest = y[i] - Rational(static_cast<long>(shift[i]));
        signs[i] = rest.sign() < 0 ? -1 : 1;
        residue[i] = rest.sign() < 0 ? -rest : rest;
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residue[b] < residue[a]; });
    std::vector<int> perm(r);
    std::vector<int> wsigns(r);
    Point c(r);
    for (std::size_t k = 0; k < r; ++k) {
        c[k] = residue[order[k]];
        perm[k] = order[k];
        wsigns[k] = signs[order[k]];
    }
    return {AffineWeylElement(std::move(shift), SignedPermutation(std::move(perm), std::move(wsigns))), std::move(c)};
}

bool Orbit::contains(const Point &y) const
{
    return y.size() == basepoint.size() && alcove_decompose(y).c == basepoint;
}

bool Orbit::facet_contains(int j) const { return std::find(facet.begin(), facet.end(), j) != facet.end(); }

std::vector<int> Orbit::finite_facet() const
{
    std::vector<int> out;
    std::copy_if(facet.begin(), facet.end(), std::back_inserter(out), [](int j) { return j > 0; });
    return out;
}

Orbit orbit_of(const Point &y)
{
    Orbit orbit{alcove_decompose(y).c, {}};
    const int r = orbit.rank();
    for (int j = 0; j <= r; ++j) {
        if (alpha_value(j, orbit.basepoint).is_zero()) {
            orbit.facet.push_back(j);
        }
    }
    return orbit;
}

int point_length(const Point &y) { return static_cast<int>(min_alcove_rep(y).word.size()); }

ExtensionKey extension_key(const Point &y) { return ExtensionKey{point_length(y), y}; }

std::vector<Point> lower_set(const Point &y)
{
    const AlcoveRep rep = min_alcove_rep(y);
    std::set<Point> points;
    for (const auto &x : subword_products(rep.word, static_cast<int>(y.size()))) {
        points.insert(x.act(rep.c));
    }
    std::vector<ExtensionKey> keys;
    keys.reserve(points.size());
    for (const auto &p : points) {
        keys.push_back(extension_key(p));
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Point> out;
    out.reserve(keys.size());
    for (auto &k : keys) {
        out.push_back(std::move(k.point));
    }
    return out;
}

bool point_leq(const Point &lhs, const Point &rhs)
{
    if (lhs.size() != rhs.size()) {
        throw DimensionMismatch("point_leq: points of different rank");
    }
    const AlcoveRep a = min_alcove_rep(lhs);
    const AlcoveRep b = min_alcove_rep(rhs);
    return a.c == b.c && bruhat_leq(a.g, b.g);
}

} // namespace quasikoorn
