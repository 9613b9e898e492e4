#include "hyperarr/linalg.hpp"

#include <utility>

namespace hyperarr::linalg {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    return rref(rows, cols).size();
}

Matrix null_space(Matrix rows, std::size_t cols) {
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool EchelonBasis::add(const Row& row) {
    Row r = row;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t c = pivots_[i];
        if (r[c] == 0) continue;
        const Rational f = r[c];
        for (std::size_t k = c; k < cols_; ++k) r[k] -= f * rows_[i][k];
    }
    std::size_t c = 0;
    while (c < cols_ && r[c] == 0) ++c;
    if (c == cols_) return false;
    const Rational inv = 1 / r[c];
    for (std::size_t k = c; k < cols_; ++k) r[k] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(c);
    return true;
}

}  // namespace hyperarr::linalg
