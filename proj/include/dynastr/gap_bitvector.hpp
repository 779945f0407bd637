#pragma once

#include <cstddef>
#include <cstdint>

#include "dynastr/spsi.hpp"

namespace dynastr {

/// Dynamic bitvector whose space depends on the number of ones.
///
/// The sequence 0^(s_1 - 1) 1 0^(s_2 - 1) 1 ... 0^(s_b - 1) 1 0^t is stored
/// as the partial-sum sequence s_1..s_b plus the trailing zero count t.
/// Position of the j-th one is sum(j + 1) - 1, so access/rank reduce to a
/// search and select to a prefix sum. Zeros can be deleted, ones cannot.
class GapBitvector {
 public:
  explicit GapBitvector(SpsiConfig config = SpsiConfig::packed()) : gaps_(config) {}

  std::size_t size() const noexcept { return gaps_.total() + tail_zeros_; }
  std::size_t ones() const noexcept { return gaps_.size(); }
  std::size_t zeros() const noexcept { return size() - ones(); }

  bool access(std::size_t i) const;
  bool operator[](std::size_t i) const { return access(i); }
  std::size_t rank(std::size_t i, bool bit = true) const;
  std::size_t select(std::size_t j, bool bit = true) const;

  void insert(std::size_t i, bool bit);
  void push_back(bool bit) { insert(size(), bit); }
  void delete_zero(std::size_t i);

  std::uint64_t audit_bits() const noexcept;

  const SpsiTree& gaps() const noexcept { return gaps_; }
  std::uint64_t tail_zeros() const noexcept { return tail_zeros_; }

 private:
  SpsiTree gaps_;
  std::uint64_t tail_zeros_ = 0;
};

}  // namespace dynastr
