#include "quasikoorn/polyrep.hpp"

#include <stdexcept>
#include <string>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

LaurentPoly LaurentPoly::mono(const IntVec &mu, const Rational &coeff)
{
    LaurentPoly p;
    p.add_term(mu, coeff);
    return p;
}

void LaurentPoly::add_term(const IntVec &mu, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mu, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational LaurentPoly::coeff(const IntVec &mu) const
{
    const auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    for (const auto &[mu, c] : o.terms_) {
        add_term(mu, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    for (const auto &[mu, c] : o.terms_) {
        add_term(mu, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly out;
    for (const auto &[mu, c] : a.terms_) {
        for (const auto &[nu, d] : b.terms_) {
            if (mu.size() != nu.size()) {
                throw DimensionMismatch("Laurent product of different ranks");
            }
            IntVec e(mu.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = mu[i] + nu[i];
            }
            out.add_term(e, c * d);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scale(const Rational &c) const
{
    LaurentPoly out;
    for (const auto &[mu, a] : terms_) {
        out.add_term(mu, a * c);
    }
    return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

LaurentPoly LaurentPoly::divide_binomial(const Rational &c, const IntVec &d) const
{
    std::size_t pivot = 0;
    while (pivot < d.size() && d[pivot] == 0) {
        ++pivot;
    }
    if (pivot == d.size()) {
        throw std::invalid_argument("divide_binomial: zero direction");
    }
    // Split the support into lines base + m d and divide along each line.
    std::map<IntVec, std::map<std::int64_t, Rational>> lines;
    for (const auto &[mu, a] : terms_) {
        const std::int64_t m = floor_div(mu[pivot], d[pivot]);
        IntVec base = mu;
        for (std::size_t i = 0; i < base.size(); ++i) {
            base[i] -= m * d[i];
        }
        lines[base][m] = a;
    }
    LaurentPoly quotient;
    for (const auto &[base, coeffs] : lines) {
        const std::int64_t lo = coeffs.begin()->first;
        const std::int64_t hi = coeffs.rbegin()->first;
        Rational carry(0);
        for (std::int64_t m = lo; m < hi; ++m) {
            const auto it = coeffs.find(m);
            carry = (it == coeffs.end() ? Rational(0) : it->second) + c * carry;
            IntVec e = base;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += m * d[i];
            }
            quotient.add_term(e, carry);
        }
        if (coeffs.at(hi) != -(c * carry)) {
            throw std::domain_error("divide_binomial: division is not exact");
        }
    }
    return quotient;
}

QuasiPolynomial to_quasi(const LaurentPoly &p)
{
    QuasiPolynomial out;
    for (const auto &[mu, c] : p.terms()) {
        out.add_term(to_point(mu), c);
    }
    return out;
}

LaurentPoly to_laurent(const QuasiPolynomial &p)
{
    LaurentPoly out;
    for (const auto &[y, c] : p.terms()) {
        IntVec mu;
        for (const auto &x : y) {
            if (!x.is_integer()) {
                throw std::invalid_argument("to_laurent: non-integral exponent " + x.str());
            }
            mu.push_back(rational_floor(x));
        }
        out.add_term(mu, c);
    }
    return out;
}

namespace {

LaurentPoly reflect(int j, const ParamSpec &params, const LaurentPoly &f)
{
    LaurentPoly out;
    for (const auto &[mu, c] : f.terms()) {
        IntVec nu = mu;
        Rational coeff = c;
        const std::size_t r = nu.size();
        if (j == 0) {
            coeff *= q_power(params, 2 * nu[0]);
            nu[0] = -nu[0];
        } else if (j == static_cast<int>(r)) {
            nu[r - 1] = -nu[r - 1];
        } else {
            std::swap(nu[j - 1], nu[j]);
        }
        out.add_term(nu, coeff);
    }
    return out;
}

} // namespace

LaurentPoly poly_T(int j, const ParamSpec &params, const LaurentPoly &f)
{
    const int r = params.rank;
    if (j < 0 || j > r) {
        throw IndexOutOfRange("poly_T: generator index " + std::to_string(j));
    }
    const auto n = static_cast<std::size_t>(r);
    const LaurentPoly sf = reflect(j, params, f);
    const LaurentPoly diff = f - sf;
    if (j == 0) {
        IntVec d(n, 0);
        d[0] = -2;
        const LaurentPoly quotient = diff.divide_binomial(q_power(params, 2), d);
        IntVec inv(n, 0);
        inv[0] = -1;
        LaurentPoly factor = LaurentPoly::mono(IntVec(n, 0), params.k0 - params.k0.inverse());
        factor.add_term(inv, (params.u0 - params.u0.inverse()) * params.sqrt_q);
        return sf.scale(params.k0) + factor * quotient;
    }
    if (j == r) {
        IntVec d(n, 0);
        d[n - 1] = 2;
        const LaurentPoly quotient = diff.divide_binomial(Rational(1), d);
        IntVec xr(n, 0);
        xr[n - 1] = 1;
        LaurentPoly factor = LaurentPoly::mono(IntVec(n, 0), params.kr - params.kr.inverse());
        factor.add_term(xr, params.ur - params.ur.inverse());
        return sf.scale(params.kr) + factor * quotient;
    }
    IntVec d(n, 0);
    d[j - 1] = 1;
    d[j] = -1;
    const LaurentPoly quotient = diff.divide_binomial(Rational(1), d);
    return sf.scale(params.k) + quotient.scale(params.k - params.k.inverse());
}

LaurentPoly poly_Y_rank_one(const ParamSpec &params, const LaurentPoly &f)
{
    if (params.rank != 1) {
        throw DimensionMismatch("poly_Y_rank_one: rank must be 1");
    }
    return poly_T(0, params, poly_T(1, params, f));
}

} // namespace quasikoorn
