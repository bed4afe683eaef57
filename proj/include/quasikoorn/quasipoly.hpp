#pragma once

#include <cstdint>
#include <map>

#include "quasikoorn/params.hpp"
#include "quasikoorn/rational.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

using Exponent = Point;

/// Finite linear combination of quasi-monomials x^y, y rational.  Zero
/// coefficients are never stored.
class QuasiPolynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    QuasiPolynomial() = default;

    static QuasiPolynomial mono(const Exponent &y, const Rational &coeff = Rational(1));

    void add_term(const Exponent &y, const Rational &coeff);
    Rational coeff(const Exponent &y) const;

    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    QuasiPolynomial &operator+=(const QuasiPolynomial &o);
    QuasiPolynomial &operator-=(const QuasiPolynomial &o);
    friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial &b) { return a += b; }
    friend QuasiPolynomial operator-(QuasiPolynomial a, const QuasiPolynomial &b) { return a -= b; }
    QuasiPolynomial operator-() const { return scale(Rational(-1)); }

    QuasiPolynomial scale(const Rational &c) const;
    /// Multiplication by q^{half_steps/2} x^mu.
    QuasiPolynomial shift(const IntVec &mu, std::int64_t half_steps, const ParamSpec &params) const;

    friend bool operator==(const QuasiPolynomial &, const QuasiPolynomial &) = default;

private:
    TermMap terms_;
};

struct Leading {
    Exponent degree;
    Rational coeff;
};

/// The unique maximal exponent of p in the Bruhat-induced order, and its
/// coefficient.  Throws MixedOrbits or NoUniqueMaximum; p must be nonzero.
Leading degree_and_leading(const QuasiPolynomial &p);

} // namespace quasikoorn
