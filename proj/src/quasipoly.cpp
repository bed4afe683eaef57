#include "quasikoorn/quasipoly.hpp"

#include <stdexcept>
#include <vector>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

QuasiPolynomial QuasiPolynomial::mono(const Exponent &y, const Rational &coeff)
{
    QuasiPolynomial p;
    p.add_term(y, coeff);
    return p;
}

void QuasiPolynomial::add_term(const Exponent &y, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(y, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational QuasiPolynomial::coeff(const Exponent &y) const
{
    const auto it = terms_.find(y);
    return it == terms_.end() ? Rational(0) : it->second;
}

QuasiPolynomial &QuasiPolynomial::operator+=(const QuasiPolynomial &o)
{
    for (const auto &[y, c] : o.terms_) {
        add_term(y, c);
    }
    return *this;
}

QuasiPolynomial &QuasiPolynomial::operator-=(const QuasiPolynomial &o)
{
    for (const auto &[y, c] : o.terms_) {
        add_term(y, -c);
    }
    return *this;
}

QuasiPolynomial QuasiPolynomial::scale(const Rational &c) const
{
    QuasiPolynomial out;
    if (c.is_zero()) {
        return out;
    }
    for (const auto &[y, a] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), y, a * c);
    }
    return out;
}

QuasiPolynomial QuasiPolynomial::shift(const IntVec &mu, std::int64_t half_steps, const ParamSpec &params) const
{
    const Rational factor = q_power(params, half_steps);
    const Point offset = to_point(mu);
    QuasiPolynomial out;
    for (const auto &[y, a] : terms_) {
        if (y.size() != mu.size()) {
            throw DimensionMismatch("shift: exponent and shift differ in length");
        }
        Exponent z = y;
        for (std::size_t i = 0; i < z.size(); ++i) {
            z[i] += offset[i];
        }
        out.terms_.emplace(std::move(z), a * factor);
    }
    return out;
}

Leading degree_and_leading(const QuasiPolynomial &p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("degree_and_leading: zero quasi-polynomial");
    }
    const auto &terms = p.terms();
    const Point basepoint = alcove_decompose(terms.begin()->first).c;
    std::vector<std::pair<const Exponent *, AlcoveRep>> reps;
    reps.reserve(terms.size());
    for (const auto &[y, c] : terms) {
        AlcoveRep rep = min_alcove_rep(y);
        if (rep.c != basepoint) {
            throw MixedOrbits("degree_and_leading: exponents lie in different orbits");
        }
        reps.emplace_back(&y, std::move(rep));
    }
    std::size_t top = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (reps[i].second.word.size() > reps[top].second.word.size()) {
            top = i;
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i != top && !bruhat_leq(reps[i].second.g, reps[top].second.g)) {
            throw NoUniqueMaximum("degree_and_leading: no unique maximal exponent");
        }
    }
    return {*reps[top].first, terms.at(*reps[top].first)};
}

} // namespace quasikoorn
