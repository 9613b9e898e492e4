#pragma once

#include <cstdint>

namespace hyperarr {

/// Element of B = {+, -}; a multiplicative group of order two.
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Plus : Sign::Minus; }

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Bit encoding used throughout: + is 0, - is 1.
constexpr unsigned to_bit(Sign s) noexcept { return static_cast<unsigned>(s); }
constexpr Sign from_bit(unsigned b) noexcept { return (b & 1u) ? Sign::Minus : Sign::Plus; }

}  // namespace hyperarr
