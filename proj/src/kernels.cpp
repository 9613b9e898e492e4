#include "hyperarr/kernels.hpp"

#include <algorithm>
#include <bit>

#include "hyperarr/feasibility.hpp"
#include "hyperarr/linalg.hpp"

namespace hyperarr::kernels {

namespace {

linalg::Matrix prefix_rows(const Arrangement& a, std::size_t count, std::uint64_t bits) {
    linalg::Matrix rows;
    for (std::size_t j = 0; j < count; ++j)
        rows.push_back(((bits >> j) & 1u) ? a.form(j).negated().coeffs : a.form(j).coeffs);
    return rows;
}

std::optional<WitnessedChamber> try_side(const Arrangement& a, std::size_t k, std::uint64_t bits) {
    auto point = find_point_with_margin(prefix_rows(a, k + 1, bits), a.dim());
    if (!point) return std::nullopt;
    return WitnessedChamber{bits, std::move(*point)};
}

// Both extensions of one chamber. The parent's interior point already realizes
// the side it lies on, so only the opposite side needs a feasibility test.
std::vector<WitnessedChamber> extend_one(const Arrangement& a, std::size_t k, const WitnessedChamber& c) {
    std::vector<WitnessedChamber> out;
    const std::uint64_t plus = c.bits;
    const std::uint64_t minus = c.bits | (std::uint64_t{1} << k);
    const int side = sgn(a.form(k).evaluate(c.point));
    if (side == 0) {
        if (auto p = try_side(a, k, plus)) out.push_back(std::move(*p));
        if (auto p = try_side(a, k, minus)) out.push_back(std::move(*p));
        return out;
    }
    out.push_back(WitnessedChamber{side > 0 ? plus : minus, c.point});
    if (auto p = try_side(a, k, side > 0 ? minus : plus)) out.push_back(std::move(*p));
    return out;
}

// Depth-first walk over the subsets of hyperplanes [first, n), carrying an
// echelon basis of the chosen forms; calls visit(mask, rank) at every leaf.
template <typename Visit>
void walk_subsets(const Arrangement& a, std::size_t j, std::uint64_t mask, const linalg::EchelonBasis& basis,
                  Visit& visit) {
    if (j == a.size()) {
        visit(mask, basis.rank());
        return;
    }
    walk_subsets(a, j + 1, mask, basis, visit);
    linalg::EchelonBasis with = basis;
    with.add(a.form(j).coeffs);
    walk_subsets(a, j + 1, mask | (std::uint64_t{1} << j), with, visit);
}

// Splits the walk by the choice on the first `prefix` hyperplanes.
std::size_t prefix_width(std::size_t n) { return std::min<std::size_t>(n, 8); }

linalg::EchelonBasis prefix_basis(const Arrangement& a, std::uint64_t prefix_mask, std::size_t prefix) {
    linalg::EchelonBasis basis(a.dim());
    for (std::size_t j = 0; j < prefix; ++j)
        if ((prefix_mask >> j) & 1u) basis.add(a.form(j).coeffs);
    return basis;
}

std::uint64_t fixed_endpoint_bits(unsigned m) { return std::uint64_t{1} << ((1u << m) - 1); }

void sort_canonical(std::vector<PhiFamily>& fams) {
    std::sort(fams.begin(), fams.end(), canonical_less);
}

std::uint64_t candidate_count(std::size_t n, unsigned m, bool shared) {
    const unsigned exponent = shared ? free_bits_per_fn(m) : static_cast<unsigned>(n) * free_bits_per_fn(m);
    return std::uint64_t{1} << exponent;
}

}  // namespace

std::vector<WitnessedChamber> extend_chambers_serial(const Arrangement& a, std::size_t k,
                                                     const std::vector<WitnessedChamber>& level) {
    std::vector<WitnessedChamber> out;
    for (const auto& c : level) {
        if (auto p = try_side(a, k, c.bits)) out.push_back(std::move(*p));
        if (auto p = try_side(a, k, c.bits | (std::uint64_t{1} << k))) out.push_back(std::move(*p));
    }
    return out;
}

std::vector<WitnessedChamber> extend_chambers_parallel(const Arrangement& a, std::size_t k,
                                                       const std::vector<WitnessedChamber>& level) {
    std::vector<std::vector<WitnessedChamber>> slots(level.size());
    const auto count = static_cast<std::int64_t>(level.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) slots[i] = extend_one(a, k, level[i]);

    std::vector<WitnessedChamber> out;
    for (auto& s : slots)
        for (auto& c : s) out.push_back(std::move(c));
    return out;
}

std::vector<std::uint8_t> subset_ranks_serial(const Arrangement& a) {
    const std::uint64_t total = std::uint64_t{1} << a.size();
    std::vector<std::uint8_t> ranks(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) ranks[mask] = static_cast<std::uint8_t>(rank_mask(a, mask));
    return ranks;
}

std::vector<std::uint8_t> subset_ranks_parallel(const Arrangement& a) {
    const std::size_t n = a.size();
    const std::size_t prefix = prefix_width(n);
    std::vector<std::uint8_t> ranks(std::uint64_t{1} << n);
    const auto tasks = static_cast<std::int64_t>(std::uint64_t{1} << prefix);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < tasks; ++t) {
        const auto basis = prefix_basis(a, static_cast<std::uint64_t>(t), prefix);
        auto store = [&](std::uint64_t mask, std::size_t r) { ranks[mask] = static_cast<std::uint8_t>(r); };
        walk_subsets(a, prefix, static_cast<std::uint64_t>(t), basis, store);
    }
    return ranks;
}

std::vector<std::int64_t> whitney_coefficients_serial(const Arrangement& a) {
    std::vector<std::int64_t> coeffs(a.dim() + 1, 0);
    const std::uint64_t total = std::uint64_t{1} << a.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto r = rank_mask(a, mask);
        coeffs[r] += ((std::popcount(mask) - r) % 2 == 0) ? 1 : -1;
    }
    return coeffs;
}

std::vector<std::int64_t> whitney_coefficients_parallel(const Arrangement& a) {
    const std::size_t n = a.size();
    const std::size_t prefix = prefix_width(n);
    const std::size_t width = a.dim() + 1;
    std::vector<std::int64_t> coeffs(width, 0);
    const auto tasks = static_cast<std::int64_t>(std::uint64_t{1} << prefix);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(width, 0);
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t t = 0; t < tasks; ++t) {
            const auto basis = prefix_basis(a, static_cast<std::uint64_t>(t), prefix);
            auto accumulate = [&](std::uint64_t mask, std::size_t r) {
                local[r] += ((std::popcount(mask) - r) % 2 == 0) ? 1 : -1;
            };
            walk_subsets(a, prefix, static_cast<std::uint64_t>(t), basis, accumulate);
        }
#pragma omp critical
        for (std::size_t d = 0; d < width; ++d) coeffs[d] += local[d];
    }
    return coeffs;
}

PhiFamily decode_candidate(std::uint64_t candidate, std::size_t n, unsigned m, bool shared) {
    const unsigned f = free_bits_per_fn(m);
    const std::uint64_t field = (std::uint64_t{1} << f) - 1;
    PhiFamily fam;
    fam.m = m;
    fam.plus_fns.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t free = shared ? (candidate & field) : ((candidate >> (j * f)) & field);
        fam.plus_fns.emplace_back(m, (free << 1) | fixed_endpoint_bits(m));
    }
    return fam;
}

std::vector<PhiFamily> search_families_serial(const ChamberSet& chambers, unsigned m, bool shared) {
    const std::size_t n = chambers.arrangement().size();
    const std::uint64_t total = candidate_count(n, m, shared);
    std::vector<PhiFamily> found;
    for (std::uint64_t c = 0; c < total; ++c) {
        auto fam = decode_candidate(c, n, m, shared);
        if (is_admissible(chambers, fam, ~std::uint64_t{0})) found.push_back(std::move(fam));
    }
    sort_canonical(found);
    return found;
}

std::vector<PhiFamily> search_families_parallel(const ChamberSet& chambers, unsigned m, bool shared) {
    const std::size_t n = chambers.arrangement().size();
    const unsigned f = free_bits_per_fn(m);
    const std::uint32_t full_word = (1u << m) - 1;

    // The induced address of a tuple depends only on its per-hyperplane words,
    // so distinct word patterns suffice. Patterns made only of endpoint words
    // come from diagonal tuples and are always realizable.
    std::vector<std::uint8_t> patterns;
    {
        const std::size_t count = chambers.size();
        std::vector<std::size_t> tuple(m, 0);
        std::vector<std::uint8_t> cur(n);
        std::vector<std::vector<std::uint8_t>> all;
        for (;;) {
            bool informative = false;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t w = 0;
                for (unsigned i = 0; i < m; ++i) w |= to_bit(chambers[tuple[i]].address[j]) << i;
                cur[j] = static_cast<std::uint8_t>(w);
                informative |= (w != 0 && w != full_word);
            }
            if (informative) all.push_back(cur);
            unsigned i = 0;
            while (i < m && ++tuple[i] == count) tuple[i++] = 0;
            if (i == m) break;
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (const auto& p : all) patterns.insert(patterns.end(), p.begin(), p.end());
    }
    const std::size_t pattern_count = n ? patterns.size() / n : 0;

    const std::uint64_t total = candidate_count(n, m, shared);
    const std::uint64_t field = (std::uint64_t{1} << f) - 1;
    const std::uint64_t fixed = fixed_endpoint_bits(m);
    std::vector<PhiFamily> found;

#pragma omp parallel
    {
        std::vector<PhiFamily> local;
        std::vector<std::uint64_t> tables(n);
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(total); ++ci) {
            const auto c = static_cast<std::uint64_t>(ci);
            for (std::size_t j = 0; j < n; ++j)
                tables[j] = ((shared ? (c & field) : ((c >> (j * f)) & field)) << 1) | fixed;
            bool ok = true;
            const std::uint8_t* p = patterns.data();
            for (std::size_t q = 0; q < pattern_count && ok; ++q, p += n) {
                std::uint64_t address = 0;
                for (std::size_t j = 0; j < n; ++j) address |= ((tables[j] >> p[j]) & 1u) << j;
                ok = chambers.contains_bits(address);
            }
            if (ok) local.push_back(decode_candidate(c, n, m, shared));
        }
#pragma omp critical
        for (auto& fam : local) found.push_back(std::move(fam));
    }
    sort_canonical(found);
    return found;
}

}  // namespace hyperarr::kernels
