#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dynastr/bitvector.hpp"
#include "dynastr/dynamic_bwt.hpp"
#include "dynastr/errors.hpp"
#include "dynastr/spsi.hpp"

namespace dynastr {

// Half-open BWT row range [lo, hi).
struct RowRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t width() const noexcept { return hi - lo; }
  bool empty() const noexcept { return hi <= lo; }
};

/// Dynamic FM-index: a DynamicBwt plus a sparse suffix-array sample.
///
/// Samples store text positions counted from the right end (the last text
/// byte is 0), so prepending bytes never changes a stored value; only the
/// marked rows move as new rows are inserted. A row is marked iff its
/// right-counted position is a multiple of the sample rate, decided when the
/// row is created. The full-text row needs no sample: it is terminator_row().
template <DynamicString L, DynamicBitvector Marks = SuccinctBitvector>
class FmIndex {
 public:
  FmIndex(L column, std::size_t sample_rate) : bwt_(std::move(column)), rate_(sample_rate) {
    if (rate_ == 0) throw UsageError("FmIndex: sample rate must be positive");
    marks_.insert(0, false);  // row of the lone "$" suffix
  }

  std::size_t text_length() const noexcept { return bwt_.text_length(); }
  std::size_t sample_rate() const noexcept { return rate_; }
  const DynamicBwt<L>& bwt() const noexcept { return bwt_; }
  const Marks& marks() const noexcept { return marks_; }
  const SpsiTree& samples() const noexcept { return samples_; }

  void extend(std::uint8_t c) {
    const std::size_t row = bwt_.extend(c);
    const std::size_t right_pos = bwt_.text_length() - 1;
    const bool sampled = right_pos % rate_ == 0;
    marks_.insert(row, sampled);
    if (sampled) samples_.insert(marks_.rank(row, true), right_pos);
  }

  RowRange full_range() const noexcept { return {0, bwt_.size()}; }

  // One backward-search step: rows of c·X given the rows of X.
  RowRange step(RowRange r, std::uint8_t c) const {
    if (r.empty() || bwt_.counts().count(c) == 0) return {};
    const std::size_t base = bwt_.first_row(c);
    return {base + bwt_.rank(r.lo, c), base + bwt_.rank(r.hi, c)};
  }

  RowRange range(std::span<const std::uint8_t> pattern) const {
    if (pattern.empty()) throw UsageError("FmIndex: empty pattern");
    RowRange r = full_range();
    for (std::size_t k = pattern.size(); k-- > 0 && !r.empty();) r = step(r, pattern[k]);
    return r;
  }

  std::size_t count(std::span<const std::uint8_t> pattern) const { return range(pattern).width(); }

  // Text position (0-based from the left) of the suffix at row.
  std::size_t position(std::size_t row) const {
    const std::size_t n = bwt_.text_length();
    for (std::size_t steps = 0;; ++steps) {
      if (row == bwt_.terminator_row()) return steps;
      if (marks_.access(row)) return n - 1 - samples_.at(marks_.rank(row, true)) + steps;
      row = bwt_.lf(row);
    }
  }

  std::vector<std::size_t> locate(std::span<const std::uint8_t> pattern) const {
    return positions(range(pattern));
  }

  std::vector<std::size_t> positions(RowRange r) const {
    std::vector<std::size_t> out;
    out.reserve(r.width());
    for (std::size_t row = r.lo; row < r.hi; ++row) out.push_back(position(row));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t audit_bits() const noexcept {
    return bwt_.audit_bits() + marks_.audit_bits() + samples_.audit_bits() + 8 * sizeof(rate_);
  }

 private:
  DynamicBwt<L> bwt_;
  Marks marks_;
  SpsiTree samples_{SpsiConfig::packed()};
  std::size_t rate_;
};

}  // namespace dynastr
