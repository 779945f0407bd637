#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>

#include "dynastr/gap_bitvector.hpp"
#include "dynastr/succinct_bitvector.hpp"

namespace dynastr {

// Operation surface shared by both bitvector representations; the string and
// index layers are generic over it.
template <class B>
concept DynamicBitvector = requires(B b, const B cb, std::size_t i, bool bit) {
  { cb.size() } -> std::convertible_to<std::size_t>;
  { cb.ones() } -> std::convertible_to<std::size_t>;
  { cb.access(i) } -> std::same_as<bool>;
  { cb.rank(i, bit) } -> std::convertible_to<std::size_t>;
  { cb.select(i, bit) } -> std::convertible_to<std::size_t>;
  { cb.audit_bits() } -> std::convertible_to<std::uint64_t>;
  b.insert(i, bit);
};

static_assert(DynamicBitvector<GapBitvector>);
static_assert(DynamicBitvector<SuccinctBitvector>);

}  // namespace dynastr
