#pragma once

#include <optional>
#include <vector>

#include "hyperarr/linalg.hpp"

namespace hyperarr {

/// Finds x with row . x >= 1 for every row, or nullopt if none exists.
///
/// Exact phase-I simplex over the rationals with Bland's anticycling rule; x is
/// free, split as x+ - x-. By positive homogeneity this also decides the
/// strict homogeneous system row . x > 0: a strict solution scales to one with
/// margin 1.
std::optional<std::vector<Rational>> find_point_with_margin(const linalg::Matrix& rows,
                                                            std::size_t dim);

}  // namespace hyperarr
