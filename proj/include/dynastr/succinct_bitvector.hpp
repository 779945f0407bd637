#pragma once

#include <cstddef>
#include <cstdint>

#include "dynastr/spsi.hpp"

namespace dynastr {

/// Dynamic bitvector in n + o(n) bits: a partial-sum tree over 0/1 elements
/// with 8192-bit leaves. rank is a prefix sum, select1/select0 are searches
/// over the bits or their complements; inside a leaf everything runs on
/// word popcounts.
class SuccinctBitvector {
 public:
  explicit SuccinctBitvector(SpsiConfig config = SpsiConfig::succinct()) : bits_(config) {}

  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t ones() const noexcept { return bits_.total(); }
  std::size_t zeros() const noexcept { return size() - ones(); }

  bool access(std::size_t i) const;
  bool operator[](std::size_t i) const { return access(i); }
  std::size_t rank(std::size_t i, bool bit = true) const;
  std::size_t select(std::size_t j, bool bit = true) const;

  void insert(std::size_t i, bool bit);
  void push_back(bool bit) { insert(size(), bit); }

  std::uint64_t audit_bits() const noexcept { return bits_.audit_bits(); }

  const SpsiTree& tree() const noexcept { return bits_; }

 private:
  SpsiTree bits_;
};

}  // namespace dynastr
