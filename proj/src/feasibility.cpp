#include "hyperarr/feasibility.hpp"

#include <cstddef>

namespace hyperarr {

std::optional<std::vector<Rational>> find_point_with_margin(const linalg::Matrix& rows,
                                                            std::size_t dim) {
    const std::size_t k = rows.size();
    if (k == 0) return std::vector<Rational>(dim, Rational(0));

    // Columns: [x+ (dim) | x- (dim) | surplus (k) | artificial (k)].
    const std::size_t cols = 2 * dim + 2 * k;
    const std::size_t art0 = 2 * dim + k;
    std::vector<std::vector<Rational>> t(k, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> rhs(k, Rational(1));
    std::vector<std::size_t> basis(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < dim; ++c) {
            t[i][c] = rows[i][c];
            t[i][dim + c] = -rows[i][c];
        }
        t[i][2 * dim + i] = -1;
        t[i][art0 + i] = 1;
        basis[i] = art0 + i;
    }

    // Reduced costs of the phase-I objective (sum of artificials).
    std::vector<Rational> cost(cols, Rational(0));
    Rational objective = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < art0; ++c) cost[c] -= t[i][c];
        objective += rhs[i];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = k;
        Rational best;
        for (std::size_t i = 0; i < k; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / t[i][enter];
            if (leave == k || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        // The phase-I objective is bounded below by zero, so a leaving row exists.
        const Rational inv = 1 / t[leave][enter];
        for (auto& v : t[leave]) v *= inv;
        rhs[leave] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t c = 0; c < cols; ++c)
                if (t[leave][c] != 0) t[i][c] -= f * t[leave][c];
            rhs[i] -= f * rhs[leave];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t c = 0; c < cols; ++c)
                if (t[leave][c] != 0) cost[c] -= f * t[leave][c];
            objective += f * rhs[leave];
        }
        basis[leave] = enter;
    }

    if (objective != 0) return std::nullopt;

    std::vector<Rational> x(dim, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (basis[i] < dim)
            x[basis[i]] += rhs[i];
        else if (basis[i] < 2 * dim)
            x[basis[i] - dim] -= rhs[i];
    }
    return x;
}

}  // namespace hyperarr
