#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dynastr/bits.hpp"

namespace dynastr {

// Position found by a leaf-level search together with the plain sum of the
// elements before it.
struct LeafHit {
  std::size_t index;
  std::uint64_t prefix;
};

/// A leaf of the partial-sum tree: non-negative integers packed at the bit
/// width of the largest one. Elements may straddle word boundaries.
///
/// Payload is re-allocated when it no longer fits; each re-allocation leaves
/// a growth buffer of one extra slot per eight elements. A block never grows
/// past the capacity its owner passes to insert().
///
/// Width-1 blocks (bit sequences) route rank/select/insert through the word
/// kernels instead of per-element loops.
class PackedBlock {
 public:
  PackedBlock() = default;
  explicit PackedBlock(std::span<const std::uint64_t> values);

  PackedBlock(const PackedBlock& other);
  PackedBlock& operator=(const PackedBlock& other);
  PackedBlock(PackedBlock&&) noexcept = default;
  PackedBlock& operator=(PackedBlock&&) noexcept = default;

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  unsigned width() const noexcept { return width_; }
  std::uint64_t sum() const noexcept { return sum_; }

  std::uint64_t at(std::size_t i) const;
  std::uint64_t prefix_sum(std::size_t i) const;

  // Smallest i with sum of elements [0, i] > x; nullopt when x >= sum().
  std::optional<LeafHit> search(std::uint64_t x) const;
  // Same over complemented 0/1 elements. Requires every element in {0,1}.
  std::optional<LeafHit> search_zero(std::uint64_t x) const;
  // Same over (element - 1). Requires every element >= 1.
  std::optional<LeafHit> search_decremented(std::uint64_t x) const;

  void update(std::size_t i, std::int64_t delta);
  void insert(std::size_t i, std::uint64_t v, std::size_t capacity);

  // Left half keeps the first ceil(size/2) elements; widths are recomputed.
  std::pair<PackedBlock, PackedBlock> split() const;

  std::vector<std::uint64_t> to_vector() const;

  std::size_t payload_words() const noexcept { return capacity_words_; }
  // Header plus payload, in bits.
  std::uint64_t allocated_bits() const noexcept {
    return 8 * sizeof(PackedBlock) + std::uint64_t{kWordBits} * capacity_words_;
  }

  // Throws std::logic_error if width minimality, cached sum, or the payload
  // bound does not hold.
  void check_invariants() const;

 private:
  std::uint64_t get(std::size_t i) const noexcept;
  void set(std::size_t i, std::uint64_t v) noexcept;
  void ensure_words(std::size_t bits);
  void repack(unsigned new_width);
  static std::size_t words_with_buffer(std::size_t bits);

  std::unique_ptr<std::uint64_t[]> words_;
  std::uint64_t sum_ = 0;
  std::uint32_t count_ = 0;
  std::uint16_t capacity_words_ = 0;
  std::uint8_t width_ = 1;
};

}  // namespace dynastr
