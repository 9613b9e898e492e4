#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperarr/chambers.hpp"
#include "hyperarr/execution.hpp"
#include "hyperarr/rational.hpp"
#include "hyperarr/sign.hpp"

namespace hyperarr {

/// Largest number of arguments a truth table can hold (2^6 = 64 bits).
inline constexpr unsigned kMaxArity = 6;

/// A Boolean function B^m -> B stored as a 2^m-entry truth table.
///
/// Words are indexed by w with bit i-1 of w describing argument i (+ is 0,
/// - is 1); bit w of the table holds the value (+ is 0, - is 1). This layout is
/// also the serialization format: hex() prints the table as a number.
class BoolFn {
public:
    BoolFn() = default;
    BoolFn(unsigned m, std::uint64_t table);

    static BoolFn projection(unsigned m, unsigned h);  // h is 1-based
    static BoolFn constant(unsigned m, Sign s);

    unsigned arity() const noexcept { return m_; }
    std::uint64_t table() const noexcept { return table_; }
    std::uint32_t word_count() const noexcept { return std::uint32_t{1} << m_; }
    Sign operator()(std::uint32_t word) const noexcept { return from_bit(static_cast<unsigned>(table_ >> word)); }
    Sign operator()(std::span<const Sign> args) const;

    /// w -> -f(-w); turns phi^+ into phi^- and back.
    BoolFn conjugate() const noexcept;
    /// f(+...+) = + and f(-...-) = -.
    bool fixes_endpoints() const noexcept;
    std::string hex() const;

    friend bool operator==(const BoolFn&, const BoolFn&) = default;

private:
    unsigned m_ = 0;
    std::uint64_t table_ = 0;
};

/// Packs a word in B^m into the index used by BoolFn.
std::uint32_t encode_word(std::span<const Sign> word);

/// Per-hyperplane aggregators phi_j^+; phi_j^- is derived as the conjugate.
struct PhiFamily {
    unsigned m = 0;
    std::vector<BoolFn> plus_fns;

    std::size_t size() const noexcept { return plus_fns.size(); }
    BoolFn fn(std::size_t j, Sign sigma) const;
    /// Every phi_j^+ fixes (+..+) and (-..-), so phi_j^sigma(+..+) = + for both sigma.
    bool satisfies_unanimity() const noexcept;

    static PhiFamily projection(std::size_t n, unsigned m, unsigned h);

    friend bool operator==(const PhiFamily&, const PhiFamily&) = default;
};

/// Canonical order: lexicographic on the concatenated tables phi_1^+, phi_2^+, ...
/// read entry by entry from word 0 with + < -.
bool canonical_less(const PhiFamily& a, const PhiFamily& b);

/// An admissible map Phi: Ch^m -> Ch, represented by its (unique) family.
struct AdmissibleMap {
    PhiFamily family;
    std::shared_ptr<const ChamberSet> chambers;

    /// Phi(tuple), tuple given as chamber ids.
    const Chamber& operator()(std::span<const std::size_t> tuple) const;
};

/// Address sign_j = phi_j^+(eps_j^+(tuple)) for every j; no realizability claim.
/// Throws Error(LengthMismatch).
SignVector induced_phi(const ChamberSet& chambers, const PhiFamily& family,
                       std::span<const std::size_t> tuple);

struct AdmissibleOptions {
    bool shared_phi = false;
    unsigned max_exponent = 24;                 // cap on the candidate-space exponent
    std::uint64_t max_tuples = 10'000'000;      // cap on |Ch|^m
    Exec exec = Exec::Parallel;
};

/// |Ch|^m, or throws Error(ResourceLimit) above max_tuples.
std::uint64_t tuple_count(const ChamberSet& chambers, unsigned m, std::uint64_t max_tuples);

/// Every tuple of Ch^m maps to a realizable sign vector. Families that violate
/// the endpoint conditions are rejected.
bool is_admissible(const ChamberSet& chambers, const PhiFamily& family,
                   std::uint64_t max_tuples = 10'000'000);

/// All admissible maps, in canonical family order. Throws Error(ResourceLimit).
std::vector<AdmissibleMap> enumerate_admissible(std::shared_ptr<const ChamberSet> chambers, unsigned m,
                                                const AdmissibleOptions& options = {});
std::vector<AdmissibleMap> enumerate_admissible(const Arrangement& a, unsigned m,
                                                const AdmissibleOptions& options = {});

/// Number of (size-1 blocks, size>=3 blocks) in the decomposition.
struct BlockProfile {
    std::size_t singletons = 0;
    std::size_t large = 0;
};
BlockProfile block_profile(const Arrangement& a);

/// 2^{a(2^m - 2)} * m^b.
BigInt count_admissible_formula(std::size_t singletons, std::size_t large, unsigned m);
BigInt count_admissible_formula(const Arrangement& a, unsigned m);

/// The coordinate h (1-based) if every phi_j^+ is the h-th projection.
std::optional<unsigned> is_projective(const PhiFamily& family);
std::optional<unsigned> is_projective(const AdmissibleMap& map);

/// Encodes S, a subset of {1..m}, as a bitmask with bit i-1 set iff i is in S.
using SubsetMask = std::uint32_t;

/// The word S_+ : + at positions in S, - elsewhere.
std::uint32_t subset_word(SubsetMask s, unsigned m);

/// K_j^sigma = { S : phi_j^sigma(S_+) = + }, sorted ascending.
std::vector<SubsetMask> filter_set_K(const PhiFamily& family, std::size_t j, Sign sigma);

struct ProductCheck {
    bool bijective = false;
    std::size_t count_sum = 0;     // |AM(A1 u A2, m)|
    std::size_t count_first = 0;   // |AM(A1, m)|
    std::size_t count_second = 0;  // |AM(A2, m)|
};

/// Enumerates AM for A1, A2 and their direct sum and checks that restriction to
/// the two hyperplane blocks is a bijection AM(A1 u A2) -> AM(A1) x AM(A2), and
/// that concatenation inverts it.
ProductCheck product_bijection_check(const Arrangement& a1, const Arrangement& a2, unsigned m,
                                     const AdmissibleOptions& options = {});

}  // namespace hyperarr
