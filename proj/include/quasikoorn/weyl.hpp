#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "quasikoorn/rational.hpp"

namespace quasikoorn {

using IntVec = std::vector<std::int64_t>;
using Point = std::vector<Rational>;

Point to_point(const IntVec &v);

/// Element of the hyperoctahedral group S_r x| (+-1)^r.  It sends the basis
/// vector e_i to signs[i] * e_{perm[i]} (0-based), so
/// (w y)_{perm[i]} = signs[i] * y_i.
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int rank);
    /// Coxeter generator s_i, 1 <= i <= rank: s_i (i < r) swaps coordinates
    /// i and i+1, s_r negates the last coordinate.
    static SignedPermutation generator(int i, int rank);
    /// The reflection s_{e_1}, negating the first coordinate.
    static SignedPermutation negate_first(int rank);
    /// All 2^r r! elements, in a fixed order.
    static std::vector<SignedPermutation> all(int rank);

    int rank() const { return static_cast<int>(perm_.size()); }
    int image(int i) const { return perm_[i]; }
    int sign(int i) const { return signs_[i]; }
    bool is_identity() const;

    Point apply(const Point &y) const;
    IntVec apply(const IntVec &y) const;

    SignedPermutation operator*(const SignedPermutation &other) const;
    SignedPermutation inverse() const;

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
    friend auto operator<=>(const SignedPermutation &, const SignedPermutation &) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Affine root a = (gradient, level), viewed as the affine functional
/// y -> <gradient, y> + level.
struct AffineRoot {
    IntVec gradient;
    std::int64_t level = 0;

    Rational operator()(const Point &y) const;
    /// True for +-e_i +- e_j (i != j) and +-2e_i.
    bool is_valid() const;
    bool is_long() const;
    /// Positive iff level > 0, or level == 0 and the gradient lies in
    /// {e_i +- e_j : i < j} u {2 e_i}.
    bool is_positive() const;
    AffineRoot operator-() const;

    friend bool operator==(const AffineRoot &, const AffineRoot &) = default;
    friend auto operator<=>(const AffineRoot &, const AffineRoot &) = default;
};

/// Finite roots e_i +- e_j (i < j) and 2 e_i, as gradients.
std::vector<IntVec> positive_finite_roots(int rank);

/// Whether a nonzero gradient is a positive finite root direction.
bool gradient_is_positive(const IntVec &gradient);

/// Simple affine root alpha_j, 0 <= j <= rank:
/// alpha_0 = (-2e_1, 1), alpha_i = (e_i - e_{i+1}, 0), alpha_r = (2e_r, 0).
AffineRoot simple_root(int j, int rank);

/// alpha_j(y).
Rational alpha_value(int j, const Point &y);

/// g = tau(translation) o finite, acting on points by y -> w y + lambda.
class AffineWeylElement {
public:
    AffineWeylElement() = default;
    AffineWeylElement(IntVec translation, SignedPermutation finite);

    static AffineWeylElement identity(int rank);
    /// s_j for 0 <= j <= rank; s_0 = tau(e_1) s_{e_1}.
    static AffineWeylElement simple_reflection(int j, int rank);
    static AffineWeylElement from_word(const std::vector<int> &word, int rank);

    int rank() const { return finite_.rank(); }
    const IntVec &translation() const { return translation_; }
    const SignedPermutation &finite() const { return finite_; }
    bool is_identity() const;

    Point act(const Point &y) const;
    AffineRoot act(const AffineRoot &a) const;
    /// g^{-1} a, without forming the inverse.
    AffineRoot act_inverse(const AffineRoot &a) const;

    AffineWeylElement operator*(const AffineWeylElement &other) const;
    AffineWeylElement inverse() const;

    friend bool operator==(const AffineWeylElement &, const AffineWeylElement &) = default;
    friend auto operator<=>(const AffineWeylElement &, const AffineWeylElement &) = default;

private:
    IntVec translation_;
    SignedPermutation finite_;
};

/// l(s_j g) < l(g), i.e. g^{-1} alpha_j is negative.
bool is_left_descent(const AffineWeylElement &g, int j);

/// Reduced word j_1 ... j_m with g = s_{j_1} ... s_{j_m}.  The first left
/// descent (scanning j = 0..r) is peeled off at every step.
std::vector<int> reduced_word(const AffineWeylElement &g);
int length(const AffineWeylElement &g);

/// Bruhat order u <= v, by the descent recursion (lifting property).
bool bruhat_leq(const AffineWeylElement &u, const AffineWeylElement &v);

/// All elements below g in Bruhat order, via subwords of one reduced word.
std::vector<AffineWeylElement> bruhat_interval_below(const AffineWeylElement &g);

/// 0 <= y_r <= ... <= y_1 <= 1/2.
bool in_closed_alcove(const Point &y);

/// Minimal-length g_y with g_y^{-1} y in the closed alcove, together with the
/// alcove point c = g_y^{-1} y and a reduced word of g_y.
struct AlcoveRep {
    AffineWeylElement g;
    Point c;
    std::vector<int> word;
};
AlcoveRep min_alcove_rep(const Point &y);

/// Some (not necessarily minimal) g with g c = y, c in the closed alcove.
/// Computed in O(r log r) by rounding and sorting.
struct AlcoveDecomposition {
    AffineWeylElement g;
    Point c;
};
AlcoveDecomposition alcove_decompose(const Point &y);

/// A W-orbit, recorded by its point c in the closed alcove and the set J of
/// simple affine roots vanishing at c.
struct Orbit {
    Point basepoint;
    std::vector<int> facet;

    int rank() const { return static_cast<int>(basepoint.size()); }
    bool contains(const Point &y) const;
    bool facet_contains(int j) const;
    /// I(O) = J(O) n {1..r}.
    std::vector<int> finite_facet() const;
    /// J(O) is empty.
    bool is_regular() const { return facet.empty(); }

    friend bool operator==(const Orbit &a, const Orbit &b) { return a.basepoint == b.basepoint; }
};

Orbit orbit_of(const Point &y);

/// {y' : y' <= y}, sorted by linear_extension_less.
std::vector<Point> lower_set(const Point &y);

/// Length of g_y.
int point_length(const Point &y);

/// Deterministic linear extension of the order on an orbit: by the length of
/// g_y, then lexicographically.
struct ExtensionKey {
    int length;
    Point point;

    friend auto operator<=>(const ExtensionKey &, const ExtensionKey &) = default;
};
ExtensionKey extension_key(const Point &y);

/// y' <= y in the Bruhat-induced order (same orbit, g_{y'} <=_B g_y).
bool point_leq(const Point &lhs, const Point &rhs);

} // namespace quasikoorn
