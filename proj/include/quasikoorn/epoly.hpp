#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasikoorn/operators.hpp"
#include "quasikoorn/params.hpp"
#include "quasikoorn/quasipoly.hpp"
#include "quasikoorn/weyl.hpp"

namespace quasikoorn {

/// The monic joint eigenfunction E_y of the Y-operators of degree y.
struct EPolynomial {
    Exponent degree;
    Orbit orbit;
    std::vector<Rational> eigenvalues;
    QuasiPolynomial poly;
};

/// Linear extension used to order the back-substitution.
enum class ExtensionOrder { LengthLex, LengthRevLex };
/// Which Y-operator separates y from a lower exponent.
enum class PivotChoice { SmallestIndex, LargestIndex };

struct SolveOptions {
    ExtensionOrder order = ExtensionOrder::LengthLex;
    PivotChoice pivot = PivotChoice::SmallestIndex;
};

/// Memoized Y_i(x^z) for one representation.
class YColumnCache {
public:
    explicit YColumnCache(const RepContext &ctx) : ctx_(ctx) {}

    const QuasiPolynomial &column(int i, const Exponent &z);
    const RepContext &context() const { return ctx_; }

private:
    RepContext ctx_;
    std::map<std::pair<int, Exponent>, QuasiPolynomial> columns_;
};

EPolynomial compute_E(const RepContext &ctx, const Exponent &y, const SolveOptions &options = {});
EPolynomial compute_E(YColumnCache &cache, const Exponent &y, const SolveOptions &options = {});

/// Rank-one reference for E_mu on the orbit Z, t = 1, built from the
/// polynomial representation and a dense nullspace computation over the
/// monomials x^z with |z| <= bound and g_z <= g_mu.
QuasiPolynomial koornwinder_oracle(const ParamSpec &params, std::int64_t mu, std::int64_t bound);

/// Points of the orbit with l(g_y) <= max_len, in linear-extension order.
std::vector<Point> orbit_points_up_to(const Orbit &orbit, int max_len);

struct BatchItem {
    Exponent degree;
    std::optional<EPolynomial> result;
    std::string error;
};

/// E_y for every y in the orbit with l(g_y) <= max_len.  Failures are
/// recorded per item and do not stop the batch.
std::vector<BatchItem> batch_E(const RepContext &ctx, int max_len, const SolveOptions &options = {});

} // namespace quasikoorn
