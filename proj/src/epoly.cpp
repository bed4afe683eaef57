#include "quasikoorn/epoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quasikoorn/errors.hpp"
#include "quasikoorn/polyrep.hpp"

namespace quasikoorn {

namespace {

std::string point_str(const Point &y)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < y.size(); ++i) {
        os << (i ? ", " : "") << y[i];
    }
    os << ')';
    return os.str();
}

std::vector<Point> ordered_lower_set(const Point &y, ExtensionOrder order)
{
    std::vector<Point> points = lower_set(y);
    if (order == ExtensionOrder::LengthRevLex) {
        std::vector<std::pair<int, Point>> keyed;
        keyed.reserve(points.size());
        for (auto &p : points) {
            const int len = point_length(p);
            keyed.emplace_back(len, std::move(p));
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
            if (a.first != b.first) {
                return a.first < b.first;
            }
            return b.second < a.second;
        });
        points.clear();
        for (auto &[len, p] : keyed) {
            points.push_back(std::move(p));
        }
    }
    return points;
}

} // namespace

const QuasiPolynomial &YColumnCache::column(int i, const Exponent &z)
{
    auto key = std::make_pair(i, z);
    auto it = columns_.find(key);
    if (it == columns_.end()) {
        it = columns_.emplace(std::move(key), Y_op(i, ctx_, QuasiPolynomial::mono(z))).first;
    }
    return it->second;
}

EPolynomial compute_E(const RepContext &ctx, const Exponent &y, const SolveOptions &options)
{
    YColumnCache cache(ctx);
    return compute_E(cache, y, options);
}

EPolynomial compute_E(YColumnCache &cache, const Exponent &y, const SolveOptions &options)
{
    const RepContext &ctx = cache.context();
    const int r = ctx.params.rank;
    if (y.size() != static_cast<std::size_t>(r)) {
        throw DimensionMismatch("compute_E: degree of wrong length");
    }
    if (!ctx.orbit.contains(y)) {
        throw OrbitMismatch("compute_E: degree " + point_str(y) + " outside the orbit");
    }

    const std::vector<Point> L = ordered_lower_set(y, options.order);
    std::map<Point, std::size_t> index;
    std::vector<AffineWeylElement> g;
    std::vector<std::vector<Rational>> gammas;
    for (std::size_t n = 0; n < L.size(); ++n) {
        index.emplace(L[n], n);
        g.push_back(min_alcove_rep(L[n]).g);
        gammas.push_back(gamma_all(ctx, L[n]));
    }

    // Triangularity of every Y_i on span{x^z : z in L}, with the expected diagonal.
    for (int i = 1; i <= r; ++i) {
        for (std::size_t n = 0; n < L.size(); ++n) {
            for (const auto &[z, c] : cache.column(i, L[n]).terms()) {
                const auto it = index.find(z);
                if (it == index.end()) {
                    throw TriangularityViolation("Y_" + std::to_string(i) + " x^" + point_str(L[n]) +
                                                 " has the term x^" + point_str(z) + " outside the lower set");
                }
                if (it->second == n) {
                    if (c != gammas[n][i - 1]) {
                        throw TriangularityViolation("Y_" + std::to_string(i) + " x^" + point_str(L[n]) +
                                                     ": diagonal entry " + c.str() + " differs from gamma " +
                                                     gammas[n][i - 1].str());
                    }
                } else if (!bruhat_leq(g[it->second], g[n])) {
                    throw TriangularityViolation("Y_" + std::to_string(i) + " x^" + point_str(L[n]) +
                                                 " has the term x^" + point_str(z) + " not below its degree");
                }
            }
        }
    }

    std::map<std::vector<Rational>, std::size_t> seen;
    for (std::size_t n = 0; n < L.size(); ++n) {
        const auto [it, inserted] = seen.emplace(gammas[n], n);
        if (!inserted) {
            std::string values;
            for (const auto &v : gammas[n]) {
                values += (values.empty() ? "" : ", ") + v.str();
            }
            throw NonGenericParameters("eigenvalue collision between x^" + point_str(L[it->second]) + " and x^" +
                                       point_str(L[n]) + ": (" + values + ")");
        }
    }

    const std::size_t top = index.at(y);
    const std::vector<Rational> &target = gammas[top];
    std::vector<Rational> v(L.size(), Rational(0));
    v[top] = Rational(1);
    std::vector<std::size_t> done{top};
    for (std::size_t n = L.size(); n-- > 0;) {
        if (n == top) {
            continue;
        }
        int pivot = 0;
        for (int i = 1; i <= r; ++i) {
            if (gammas[n][i - 1] != target[i - 1]) {
                pivot = i;
                if (options.pivot == PivotChoice::SmallestIndex) {
                    break;
                }
            }
        }
        if (pivot == 0) {
            throw NonGenericParameters("no Y-operator separates x^" + point_str(L[n]) + " from x^" + point_str(y));
        }
        Rational sum(0);
        for (const std::size_t w : done) {
            if (!v[w].is_zero()) {
                const Rational entry = cache.column(pivot, L[w]).coeff(L[n]);
                if (!entry.is_zero()) {
                    sum += entry * v[w];
                }
            }
        }
        v[n] = sum / (target[pivot - 1] - gammas[n][pivot - 1]);
        done.push_back(n);
    }

    EPolynomial result{y, ctx.orbit, target, {}};
    for (std::size_t n = 0; n < L.size(); ++n) {
        result.poly.add_term(L[n], v[n]);
    }

    for (int i = 1; i <= r; ++i) {
        QuasiPolynomial image;
        for (const auto &[z, c] : result.poly.terms()) {
            image += cache.column(i, z).scale(c);
        }
        if (image != result.poly.scale(target[i - 1])) {
            throw TriangularityViolation("E_" + point_str(y) + " fails the eigen-equation for Y_" +
                                         std::to_string(i));
        }
    }
    return result;
}

QuasiPolynomial koornwinder_oracle(const ParamSpec &params, std::int64_t mu, std::int64_t bound)
{
    if (params.rank != 1) {
        throw DimensionMismatch("koornwinder_oracle: rank must be 1");
    }
    if (mu > bound || -mu > bound) {
        throw std::invalid_argument("koornwinder_oracle: |mu| exceeds the bound");
    }
    const AffineWeylElement top = min_alcove_rep(to_point(IntVec{mu})).g;
    std::vector<std::int64_t> basis;
    for (std::int64_t z = -bound; z <= bound; ++z) {
        if (bruhat_leq(min_alcove_rep(to_point(IntVec{z})).g, top)) {
            basis.push_back(z);
        }
    }
    const std::size_t n = basis.size();
    std::map<std::int64_t, std::size_t> index;
    for (std::size_t a = 0; a < n; ++a) {
        index.emplace(basis[a], a);
    }

    // Dense matrix of Y_1 on the basis: column b holds Y_1 x^{basis[b]}.
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t b = 0; b < n; ++b) {
        const LaurentPoly image = poly_Y_rank_one(params, LaurentPoly::mono(IntVec{basis[b]}));
        for (const auto &[e, c] : image.terms()) {
            const auto it = index.find(e[0]);
            if (it == index.end()) {
                throw TriangularityViolation("koornwinder_oracle: Y_1 leaves the span of the basis");
            }
            M[it->second][b] = c;
        }
    }

    // Solve (M - gamma) v = 0 with v_mu = 1 by Gaussian elimination on the
    // remaining unknowns.
    const std::size_t pin = index.at(mu);
    const Rational eigenvalue = M[pin][pin];
    std::vector<std::size_t> unknowns;
    for (std::size_t b = 0; b < n; ++b) {
        if (b != pin) {
            unknowns.push_back(b);
        }
    }
    const std::size_t m = unknowns.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t u = 0; u < m; ++u) {
            A[a][u] = M[a][unknowns[u]] - (a == unknowns[u] ? eigenvalue : Rational(0));
        }
        A[a][m] = -(M[a][pin] - (a == pin ? eigenvalue : Rational(0)));
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(m);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t sel = row;
        while (sel < n && A[sel][col].is_zero()) {
            ++sel;
        }
        if (sel == n) {
            throw NonGenericParameters("koornwinder_oracle: eigenspace is not one-dimensional");
        }
        std::swap(A[sel], A[row]);
        const Rational inv = A[row][col].inverse();
        for (auto &x : A[row]) {
            x *= inv;
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (a != row && !A[a][col].is_zero()) {
                const Rational f = A[a][col];
                for (std::size_t c = col; c <= m; ++c) {
                    A[a][c] -= f * A[row][c];
                }
            }
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t a = row; a < n; ++a) {
        if (!A[a][m].is_zero()) {
            throw NonGenericParameters("koornwinder_oracle: no eigenvector with the leading monomial");
        }
    }
    QuasiPolynomial out = QuasiPolynomial::mono(to_point(IntVec{mu}));
    for (std::size_t u = 0; u < m; ++u) {
        out.add_term(to_point(IntVec{basis[unknowns[u]]}), A[pivot_row[u]][m]);
    }
    return out;
}

std::vector<Point> orbit_points_up_to(const Orbit &orbit, int max_len)
{
    const int r = orbit.rank();
    std::set<Point> found{orbit.basepoint};
    std::vector<Point> frontier{orbit.basepoint};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Point> next;
        for (const auto &z : frontier) {
            for (int j = 0; j <= r; ++j) {
                Point w = AffineWeylElement::simple_reflection(j, r).act(z);
                if (!found.count(w) && point_length(w) == len) {
                    found.insert(w);
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<ExtensionKey> keys;
    for (const auto &p : found) {
        keys.push_back(extension_key(p));
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Point> out;
    for (auto &k : keys) {
        out.push_back(std::move(k.point));
    }
    return out;
}

std::vector<BatchItem> batch_E(const RepContext &ctx, int max_len, const SolveOptions &options)
{
    YColumnCache cache(ctx);
    std::vector<BatchItem> items;
    for (auto &y : orbit_points_up_to(ctx.orbit, max_len)) {
        BatchItem item{y, std::nullopt, {}};
        try {
            item.result = compute_E(cache, y, options);
        } catch (const Error &e) {
            item.error = e.what();
        }
        items.push_back(std::move(item));
    }
    return items;
}

} // namespace quasikoorn
