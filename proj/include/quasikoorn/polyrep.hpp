#pragma once

#include <map>

#include "quasikoorn/params.hpp"
#include "quasikoorn/quasipoly.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

/// Laurent polynomial in x_1, ..., x_r with rational coefficients.  Kept
/// separate from QuasiPolynomial so the polynomial representation can serve
/// as an independent reference.
class LaurentPoly {
public:
    using TermMap = std::map<IntVec, Rational>;

    LaurentPoly() = default;
    static LaurentPoly mono(const IntVec &mu, const Rational &coeff = Rational(1));

    void add_term(const IntVec &mu, const Rational &coeff);
    Rational coeff(const IntVec &mu) const;
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly scale(const Rational &c) const;

    /// Exact quotient by (1 - c x^d).  Throws std::domain_error when the
    /// division leaves a remainder.
    LaurentPoly divide_binomial(const Rational &c, const IntVec &d) const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    TermMap terms_;
};

QuasiPolynomial to_quasi(const LaurentPoly &p);
/// Throws std::invalid_argument on a non-integral exponent.
LaurentPoly to_laurent(const QuasiPolynomial &p);

/// Demazure-Lusztig operators of the polynomial representation, written as
/// divided differences of Laurent polynomials:
///   T_i f = k s_i f + (k - k^{-1}) (f - s_i f) / (1 - x_i/x_{i+1}),
///   T_r f = k_r s_r f + ((k_r - k_r^{-1}) + (u_r - u_r^{-1}) x_r) (f - s_r f) / (1 - x_r^2),
///   T_0 f = k_0 s_0 f + ((k_0 - k_0^{-1}) + (u_0 - u_0^{-1}) q^{1/2} x_1^{-1}) (f - s_0 f) / (1 - q x_1^{-2}),
/// with s_0 x^mu = q^{mu_1} x^{s_{e_1} mu}.
LaurentPoly poly_T(int j, const ParamSpec &params, const LaurentPoly &f);

/// Y_1 = T_0 T_1 in rank one.
LaurentPoly poly_Y_rank_one(const ParamSpec &params, const LaurentPoly &f);

} // namespace quasikoorn
