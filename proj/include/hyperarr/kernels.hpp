#pragma once

// Hot loops of the library. Each kernel has an OpenMP version and a serial
// reference version that takes a deliberately different (simpler) route; the
// tests require both to agree and bench/ compares their speed.

#include <cstdint>
#include <vector>

#include "hyperarr/admissible.hpp"
#include "hyperarr/arrangement.hpp"
#include "hyperarr/chambers.hpp"

namespace hyperarr::kernels {

struct WitnessedChamber {
    std::uint64_t bits;              // address on hyperplanes 0..k-1
    std::vector<Rational> point;     // interior point with margin >= 1
};

/// Chambers of {H_0..H_k} from the chambers of {H_0..H_{k-1}}. Order of the result
/// is unspecified.
std::vector<WitnessedChamber> extend_chambers_serial(const Arrangement& a, std::size_t k,
                                                     const std::vector<WitnessedChamber>& level);
std::vector<WitnessedChamber> extend_chambers_parallel(const Arrangement& a, std::size_t k,
                                                       const std::vector<WitnessedChamber>& level);

/// rank of every subset, indexed by bitmask.
std::vector<std::uint8_t> subset_ranks_serial(const Arrangement& a);
std::vector<std::uint8_t> subset_ranks_parallel(const Arrangement& a);

/// Coefficients of the Whitney expansion sum_B (-1)^{|B|-r(B)} t^{r(B)}.
std::vector<std::int64_t> whitney_coefficients_serial(const Arrangement& a);
std::vector<std::int64_t> whitney_coefficients_parallel(const Arrangement& a);

/// Number of free truth-table bits per hyperplane: 2^m - 2.
inline unsigned free_bits_per_fn(unsigned m) { return (1u << m) - 2; }

/// The family encoded by a candidate index: hyperplane j takes the free bits
/// [j*f, (j+1)*f) (or bits [0, f) for every j when shared), endpoints fixed.
PhiFamily decode_candidate(std::uint64_t candidate, std::size_t n, unsigned m, bool shared);

/// All admissible families among the 2^E candidates, in canonical order.
std::vector<PhiFamily> search_families_serial(const ChamberSet& chambers, unsigned m, bool shared);
std::vector<PhiFamily> search_families_parallel(const ChamberSet& chambers, unsigned m, bool shared);

}  // namespace hyperarr::kernels
