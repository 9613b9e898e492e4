#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr {

/// Nonzero linear form alpha(x) = sum_i coeffs[i] * x_i. Its kernel is a hyperplane
/// through the origin; the sign of alpha fixes the positive side.
struct LinearForm {
    std::vector<Rational> coeffs;

    std::size_t dim() const { return coeffs.size(); }
    bool is_zero() const;
    Rational evaluate(const std::vector<Rational>& x) const;
    LinearForm negated() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }
};

/// A finite, ordered set of distinct central hyperplanes in R^dim.
///
/// Hyperplane order is significant: sign vectors and truth-table families are
/// indexed by it. Instances are immutable once constructed.
class Arrangement {
public:
    /// Validates and takes ownership. Throws Error(ZeroForm | DuplicateHyperplane |
    /// DimensionMismatch). Empty labels default to "H1".."Hn".
    Arrangement(std::size_t dim, std::vector<LinearForm> forms,
                std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return forms_.size(); }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    const LinearForm& form(std::size_t j) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t j) const;

    /// Subarrangement on the given indices (in the order given).
    Arrangement restrict_to(const std::vector<std::size_t>& indices) const;

    /// Same hyperplanes with the orientation of hyperplane j reversed.
    Arrangement with_flipped(std::size_t j) const;

    /// Same hyperplanes listed in the order perm[0], perm[1], ...
    Arrangement permuted(const std::vector<std::size_t>& perm) const;

    /// If this is exactly the braid arrangement {x_i - x_j : i < j} in
    /// lexicographic (i, j) order, returns ell.
    std::optional<std::size_t> braid_ell() const;

    friend bool operator==(const Arrangement& a, const Arrangement& b);

private:
    std::size_t dim_;
    std::vector<LinearForm> forms_;
    std::vector<std::string> labels_;
};

/// Parses the JSON arrangement document:
///   {"dim": 3, "forms": [["1","-1","0"], ...], "labels": ["H12", ...]}
Arrangement parse_arrangement(std::string_view json_text);

/// Compact canonical JSON with reduced rationals; parse_arrangement inverts it.
std::string serialize_arrangement(const Arrangement& a);

/// Braid arrangement {x_i - x_j : 1 <= i < j <= ell}, labels "H{i}{j}".
Arrangement builtin_braid(std::size_t ell);

/// Coordinate hyperplanes x_1, ..., x_d in R^d.
Arrangement builtin_boolean(std::size_t d);

/// A1 and A2 placed in complementary coordinate blocks of R^{dim1 + dim2}; the
/// forms of A1 come first.
Arrangement direct_sum(const Arrangement& a1, const Arrangement& a2);

/// Rank of the forms indexed by `subset`, by exact Gaussian elimination.
/// Throws Error(IndexOutOfRange).
std::size_t rank(const Arrangement& a, const std::vector<std::size_t>& subset);

/// Rank of the subset encoded as a bitmask (bit j <-> hyperplane j). Requires n <= 64.
std::size_t rank_mask(const Arrangement& a, std::uint64_t subset);

/// Rank of all forms; equals the codimension of the intersection of all hyperplanes.
std::size_t rank(const Arrangement& a);

}  // namespace hyperarr
