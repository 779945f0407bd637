#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dynastr/dynamic_string.hpp"
#include "dynastr/errors.hpp"

namespace dynastr {

// One BWT cell: a byte, or kTerminator for the end-of-text marker, which
// sorts below every byte.
using BwtSymbol = std::int16_t;
inline constexpr BwtSymbol kTerminator = -1;

/// Per-byte occurrence counts with prefix sums (a 256-slot Fenwick tree).
/// This is the F column: F is the sorted multiset of L, so it is fully
/// described by how many times each byte occurs.
class SymbolCounts {
 public:
  void add(std::uint8_t c) noexcept {
    ++count_[c];
    for (std::size_t k = std::size_t{c} + 1; k <= 256; k += k & (~k + 1)) ++tree_[k - 1];
  }
  std::uint64_t count(std::uint8_t c) const noexcept { return count_[c]; }
  // Bytes strictly smaller than c.
  std::uint64_t less_than(std::uint8_t c) const noexcept {
    std::uint64_t s = 0;
    for (std::size_t k = c; k > 0; k -= k & (~k + 1)) s += tree_[k - 1];
    return s;
  }
  static constexpr std::uint64_t audit_bits() noexcept { return 8 * 2 * 256 * sizeof(std::uint64_t); }

 private:
  std::array<std::uint64_t, 256> count_{};
  std::array<std::uint64_t, 256> tree_{};
};

/// Burrows-Wheeler transform of T$ maintained under left extension.
///
/// L is generic over the dynamic string type. The terminator is kept out of
/// band: the string holds the n text bytes and terminator_row() says where
/// the single '$' sits among the n + 1 rows. Extending by c writes c in the
/// terminator's cell and inserts the new terminator at the row of cT$.
template <DynamicString L>
class DynamicBwt {
 public:
  explicit DynamicBwt(L column) : column_(std::move(column)) {
    if (column_.size() != 0) throw UsageError("DynamicBwt: L column must start empty");
  }

  std::size_t size() const noexcept { return column_.size() + 1; }
  std::size_t text_length() const noexcept { return column_.size(); }
  std::size_t terminator_row() const noexcept { return terminator_; }
  const L& column() const noexcept { return column_; }
  const SymbolCounts& counts() const noexcept { return counts_; }

  BwtSymbol at(std::size_t row) const {
    if (row >= size()) throw UsageError("DynamicBwt::at: row out of range");
    if (row == terminator_) return kTerminator;
    return static_cast<BwtSymbol>(column_.access(row < terminator_ ? row : row - 1));
  }

  // Occurrences of c in rows [0, row).
  std::size_t rank(std::size_t row, std::uint8_t c) const {
    if (row > size()) throw UsageError("DynamicBwt::rank: row out of range");
    if (counts_.count(c) == 0) return 0;
    return column_.rank(row <= terminator_ ? row : row - 1, c);
  }

  // First row whose suffix starts with c.
  std::size_t first_row(std::uint8_t c) const noexcept { return 1 + counts_.less_than(c); }

  std::size_t lf(std::size_t row) const {
    const BwtSymbol c = at(row);
    if (c == kTerminator) return 0;
    return first_row(static_cast<std::uint8_t>(c)) + rank(row, static_cast<std::uint8_t>(c));
  }

  // Prepends c to the text; returns the row of the new full-text suffix.
  std::size_t extend(std::uint8_t c) {
    column_.insert(terminator_, c);
    const std::size_t row = first_row(c) + column_.rank(terminator_, c);
    counts_.add(c);
    terminator_ = row;
    return row;
  }

  std::vector<BwtSymbol> to_vector() const {
    std::vector<BwtSymbol> out;
    out.reserve(size());
    for (std::size_t r = 0; r < size(); ++r) out.push_back(at(r));
    return out;
  }

  std::uint64_t audit_bits() const noexcept {
    return column_.audit_bits() + SymbolCounts::audit_bits() + 8 * sizeof(terminator_);
  }

 private:
  L column_;
  SymbolCounts counts_;
  std::size_t terminator_ = 0;
};

}  // namespace dynastr
