#include "quasikoorn/params.hpp"

#include <string>

#include "quasikoorn/errors.hpp"

namespace quasikoorn {

void ParamSpec::validate() const
{
    if (rank < 1) {
        throw InvalidParameters("rank must be positive, got " + std::to_string(rank));
    }
    const std::pair<const char *, const Rational *> scalars[] = {
        {"sqrt_q", &sqrt_q}, {"k0", &k0}, {"u0", &u0}, {"k", &k}, {"kr", &kr}, {"ur", &ur},
    };
    for (const auto &[name, value] : scalars) {
        if (value->is_zero()) {
            throw InvalidParameters(std::string("parameter ") + name + " must be nonzero");
        }
    }
}

Rational q_power(const ParamSpec &params, std::int64_t half_steps) { return pow(params.sqrt_q, half_steps); }

TorusPoint TorusPoint::operator*(const TorusPoint &other) const
{
    if (other.coords.size() != coords.size()) {
        throw DimensionMismatch("torus points of different rank");
    }
    TorusPoint out{coords};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.coords[i] *= other.coords[i];
    }
    return out;
}

TorusPoint TorusPoint::unit(int rank) { return TorusPoint{std::vector<Rational>(static_cast<std::size_t>(rank), Rational(1))}; }

Rational torus_eval(const TorusPoint &t, const std::vector<std::int64_t> &mu)
{
    if (mu.size() != t.coords.size()) {
        throw DimensionMismatch("torus_eval: exponent has wrong length");
    }
    Rational out(1);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] != 0) {
            out *= pow(t.coords[i], mu[i]);
        }
    }
    return out;
}

} // namespace quasikoorn
