#pragma once

#include <cstdint>
#include <vector>

#include "quasikoorn/rational.hpp"

namespace quasikoorn {

/// Specialised parameters of the rank-r double affine Hecke algebra of type
/// C^vC_r.  For rank 1 the short-root parameter k is carried but never used.
struct ParamSpec {
    int rank = 1;
    Rational sqrt_q{1};
    Rational k0{1};
    Rational u0{1};
    Rational k{1};
    Rational kr{1};
    Rational ur{1};

    /// Throws InvalidParameters unless rank >= 1 and every scalar is nonzero.
    void validate() const;

    friend bool operator==(const ParamSpec &, const ParamSpec &) = default;
};

/// (sqrt_q)^half_steps, i.e. q^(half_steps/2).
Rational q_power(const ParamSpec &params, std::int64_t half_steps);

/// Point of the torus (F^x)^r; coords[i] is the value of the character at
/// the co-weight e_{i+1}.
struct TorusPoint {
    std::vector<Rational> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    const Rational &operator[](std::size_t i) const { return coords[i]; }

    /// Coordinatewise product.
    TorusPoint operator*(const TorusPoint &other) const;

    /// The identity 1_T of rank r.
    static TorusPoint unit(int rank);

    friend bool operator==(const TorusPoint &, const TorusPoint &) = default;
};

/// t^mu = prod_i t_i^{mu_i}.
Rational torus_eval(const TorusPoint &t, const std::vector<std::int64_t> &mu);

} // namespace quasikoorn
