#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>

#include "dynastr/prefix_code.hpp"
#include "dynastr/rle_string.hpp"
#include "dynastr/wavelet_string.hpp"

namespace dynastr {

template <class S>
concept DynamicString = requires(S s, const S cs, std::size_t i, Symbol c) {
  { cs.size() } -> std::convertible_to<std::size_t>;
  { cs.access(i) } -> std::convertible_to<Symbol>;
  { cs.rank(i, c) } -> std::convertible_to<std::size_t>;
  { cs.select(i, c) } -> std::convertible_to<std::size_t>;
  { cs.audit_bits() } -> std::convertible_to<std::uint64_t>;
  s.insert(i, c);
};

static_assert(DynamicString<WaveletString>);
static_assert(DynamicString<RleString>);

}  // namespace dynastr
