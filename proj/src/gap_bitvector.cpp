#include "dynastr/gap_bitvector.hpp"

#include <string>

#include "dynastr/errors.hpp"

namespace dynastr {

bool GapBitvector::access(std::size_t i) const {
  if (i >= size()) throw UsageError("GapBitvector::access: position " + std::to_string(i) + " out of range");
  if (i >= gaps_.total()) return false;
  const SearchHit run = gaps_.search(i);
  return i == run.prefix + run.value - 1;
}

std::size_t GapBitvector::rank(std::size_t i, bool bit) const {
  if (i > size()) throw UsageError("GapBitvector::rank: prefix length out of range");
  const std::size_t r1 = i >= gaps_.total() ? ones() : gaps_.search(i).index;
  return bit ? r1 : i - r1;
}

std::size_t GapBitvector::select(std::size_t j, bool bit) const {
  if (bit) {
    if (j >= ones()) throw NotFound("GapBitvector::select1: rank " + std::to_string(j) + " out of range");
    return gaps_.sum(j + 1) - 1;
  }
  if (j >= zeros()) throw NotFound("GapBitvector::select0: rank " + std::to_string(j) + " out of range");
  const std::uint64_t run_zeros = gaps_.total() - ones();
  if (j >= run_zeros) return gaps_.total() + (j - run_zeros);
  // The run holding the zero is found on cumulative (gap - 1) values.
  const SearchHit run = gaps_.search_decremented(j);
  const std::uint64_t zeros_before = run.prefix - run.index;
  return run.prefix + (j - zeros_before);
}

void GapBitvector::insert(std::size_t i, bool bit) {
  if (i > size()) throw UsageError("GapBitvector::insert: position out of range");
  const std::uint64_t covered = gaps_.total();
  if (i >= covered) {
    if (!bit) {
      ++tail_zeros_;
      return;
    }
    const std::uint64_t lead = i - covered;
    gaps_.push_back(lead + 1);
    tail_zeros_ -= lead;
    return;
  }
  const SearchHit run = gaps_.search(i);
  if (!bit) {
    gaps_.update(run.index, 1);
    return;
  }
  // Split the run at i: the new one closes a run of length i - start + 1.
  const std::uint64_t head = i - run.prefix;
  gaps_.insert(run.index, head + 1);
  gaps_.update(run.index + 1, -static_cast<std::int64_t>(head));
}

void GapBitvector::delete_zero(std::size_t i) {
  if (i >= size()) throw UsageError("GapBitvector::delete_zero: position out of range");
  if (i >= gaps_.total()) {
    --tail_zeros_;
    return;
  }
  const SearchHit run = gaps_.search(i);
  if (i == run.prefix + run.value - 1) throw DomainError("GapBitvector::delete_zero: bit at position is 1");
  gaps_.update(run.index, -1);
}

std::uint64_t GapBitvector::audit_bits() const noexcept {
  return gaps_.audit_bits() + 8 * sizeof(tail_zeros_);
}

}  // namespace dynastr
