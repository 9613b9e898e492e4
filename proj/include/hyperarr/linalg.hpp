#pragma once

#include <cstddef>
#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Rank by exact Gaussian elimination; works on a copy.
std::size_t rank(Matrix rows);

/// Basis of the right null space {x : M x = 0}, width `cols`.
Matrix null_space(Matrix rows, std::size_t cols);

/// Incrementally maintained row-echelon basis. Adding a row reduces it against
/// the current pivots and keeps it iff the remainder is nonzero.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    /// Returns true if the row increased the rank.
    bool add(const Row& row);
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    std::size_t cols_;
    std::vector<Row> rows_;            // normalized: pivot entry is 1
    std::vector<std::size_t> pivots_;  // pivot column per row
};

}  // namespace hyperarr::linalg
