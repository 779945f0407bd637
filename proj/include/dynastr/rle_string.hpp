#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dynastr/gap_bitvector.hpp"
#include "dynastr/prefix_code.hpp"
#include "dynastr/wavelet_string.hpp"

namespace dynastr {

/// Run-length compressed dynamic string.
///
/// heads:    one symbol per maximal run, as a wavelet string.
/// run_ends: length-n gap bitvector with a one on the last position of
///           every run.
/// lengths:  per symbol c, the lengths of the c-runs in text order, each
///           run of length m written as 0^(m-1) 1.
///
/// Runs stay maximal across inserts: a symbol next to a run of the same
/// symbol extends it, one inside a run of another symbol splits it in three.
class RleString {
 public:
  explicit RleString(PrefixCode head_code = PrefixCode::gamma());

  std::size_t size() const noexcept { return size_; }
  std::size_t runs() const noexcept { return heads_.size(); }

  Symbol access(std::size_t i) const;
  Symbol operator[](std::size_t i) const { return access(i); }
  std::size_t rank(std::size_t i, Symbol c) const;
  std::size_t select(std::size_t j, Symbol c) const;
  void insert(std::size_t i, Symbol c);
  void push_back(Symbol c) { insert(size_, c); }

  std::uint64_t audit_bits() const noexcept;

  const WaveletString& heads() const noexcept { return heads_; }
  const GapBitvector& run_ends() const noexcept { return run_ends_; }
  // Null when c never occurred.
  const GapBitvector* run_lengths(Symbol c) const;

  std::vector<Symbol> to_vector() const;

 private:
  std::size_t run_of(std::size_t i) const { return run_ends_.rank(i, true); }
  std::size_t run_start(std::size_t run) const { return run == 0 ? 0 : run_ends_.select(run - 1, true) + 1; }
  GapBitvector& lengths_for(Symbol c);
  static std::size_t segment_start(const GapBitvector& v, std::size_t t) { return t == 0 ? 0 : v.select(t - 1, true) + 1; }

  WaveletString heads_;
  GapBitvector run_ends_;
  // Run lengths per head symbol, sorted by symbol.
  using LengthsEntry = std::pair<Symbol, GapBitvector>;
  std::vector<LengthsEntry> lengths_;
  std::size_t size_ = 0;
};

}  // namespace dynastr
