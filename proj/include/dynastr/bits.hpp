#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace dynastr {

inline constexpr unsigned kWordBits = 64;

/// Number of bits needed to write x in binary; a stored zero still costs one bit.
constexpr unsigned bitsize(std::uint64_t x) noexcept {
  return x == 0 ? 1u : static_cast<unsigned>(std::bit_width(x));
}

constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

constexpr std::uint64_t low_mask(unsigned width) noexcept {
  return width >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace dynastr
