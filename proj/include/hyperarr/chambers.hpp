#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/execution.hpp"
#include "hyperarr/linalg.hpp"
#include "hyperarr/sign.hpp"

namespace hyperarr {

inline constexpr std::size_t kMaxSignVectorLength = 64;

/// A word in {+,-}^n, bit-packed: bit j is set iff entry j is '-'.
class SignVector {
public:
    SignVector() = default;
    SignVector(std::size_t n, std::uint64_t bits);

    /// Parses a string over "+-". Throws Error(MalformedInput).
    static SignVector parse(std::string_view text);
    static SignVector uniform(std::size_t n, Sign s);

    std::size_t size() const noexcept { return n_; }
    std::uint64_t bits() const noexcept { return bits_; }
    Sign operator[](std::size_t j) const noexcept { return from_bit(static_cast<unsigned>(bits_ >> j)); }
    SignVector with(std::size_t j, Sign s) const;
    SignVector operator-() const noexcept;
    std::string to_string() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

    /// Canonical order: lexicographic on the word with + < -.
    friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);

private:
    std::size_t n_ = 0;
    std::uint64_t bits_ = 0;
};

struct Chamber {
    std::size_t id;
    SignVector address;
};

/// The chambers of an arrangement in canonical address order.
class ChamberSet {
public:
    /// Sorts and indexes the addresses; they must be distinct and realizable.
    ChamberSet(std::shared_ptr<const Arrangement> arrangement, std::vector<SignVector> addresses);

    const Arrangement& arrangement() const noexcept { return *arrangement_; }
    const std::shared_ptr<const Arrangement>& arrangement_ptr() const noexcept { return arrangement_; }
    std::size_t size() const noexcept { return chambers_.size(); }
    const Chamber& operator[](std::size_t id) const { return chambers_.at(id); }
    const std::vector<Chamber>& chambers() const noexcept { return chambers_; }

    std::optional<std::size_t> find(const SignVector& v) const;
    std::optional<std::size_t> find_bits(std::uint64_t bits) const noexcept {
        if (!dense_.empty()) {
            const auto id = dense_[bits];
            return id < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(id));
        }
        auto it = index_.find(bits);
        return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }
    bool contains_bits(std::uint64_t bits) const noexcept {
        return !dense_.empty() ? dense_[bits] >= 0 : index_.count(bits) != 0;
    }

    const Chamber& antipode(const Chamber& c) const;

private:
    std::shared_ptr<const Arrangement> arrangement_;
    std::vector<Chamber> chambers_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::int32_t> dense_;  // direct lookup table when n is small
};

struct ChamberOptions {
    std::size_t max_chambers = 1'000'000;
    Exec exec = Exec::Parallel;
};

/// Rows sigma_j * alpha_j for the given sign vector.
linalg::Matrix oriented_rows(const Arrangement& a, const SignVector& v);

/// An interior point of the chamber with address v, or nullopt if v is not realizable.
std::optional<std::vector<Rational>> realizing_point(const Arrangement& a, const SignVector& v);

/// True iff some x has sign(alpha_j(x)) = v_j for all j. Throws Error(LengthMismatch).
bool is_realizable(const Arrangement& a, const SignVector& v);

/// Incremental enumeration: chambers of {H_1..H_k} from both extensions of each
/// chamber of {H_1..H_{k-1}}. Throws Error(ResourceLimit) past options.max_chambers.
std::shared_ptr<const ChamberSet> enumerate_chambers(const Arrangement& a, const ChamberOptions& options = {});
std::shared_ptr<const ChamberSet> enumerate_chambers(std::shared_ptr<const Arrangement> a,
                                                     const ChamberOptions& options = {});

/// Tests all 2^n sign vectors; n <= 16.
std::shared_ptr<const ChamberSet> enumerate_chambers_bruteforce(const Arrangement& a);

/// sigma * (side of H_j containing ch). Throws Error(IndexOutOfRange).
Sign epsilon(const ChamberSet& chambers, std::size_t j, Sign sigma, const Chamber& ch);

/// Componentwise epsilon over a tuple of chambers.
std::vector<Sign> epsilon_tuple(const ChamberSet& chambers, std::size_t j, Sign sigma,
                                std::span<const Chamber> tuple);

/// The two sign vectors missing from a circuit's chamber set, as (tau, -tau) with
/// tau < -tau canonically. Throws Error(NotACircuit).
std::pair<SignVector, SignVector> circuit_missing_signs(const Arrangement& a,
                                                        const std::vector<std::size_t>& circuit);

/// For a braid arrangement address, the total order "x1<x3<x2" it encodes.
std::string permutation_label(std::size_t ell, const SignVector& address);

}  // namespace hyperarr
