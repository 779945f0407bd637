#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynastr/dynamic_bwt.hpp"

namespace dynastr {

enum class BwtMode { kRle, kWavelet };

struct BwtBuild {
  std::vector<BwtSymbol> bwt;
  // Largest audit of the dynamic BWT seen during construction (sampled every
  // 64 extensions and at the end).
  std::uint64_t peak_audit_bits = 0;
};

// BWT of text$ built by feeding the text right to left into a DynamicBwt.
// rle: run-length L column, run heads with a fixed code over the text's bytes.
// wavelet: Huffman-shaped wavelet L column over the text's byte frequencies.
BwtBuild build_bwt(std::span<const std::uint8_t> text, BwtMode mode);

// Inverse transform by an LF walk. Throws FormatError unless the input holds
// exactly one terminator.
std::vector<std::uint8_t> invert_bwt(std::span<const BwtSymbol> bwt);

/// One LZ77 phrase: a copy of `length` bytes from `source` (absent when
/// length is 0) followed by the literal `next`.
struct Lz77Factor {
  std::optional<std::size_t> source;
  std::size_t length = 0;
  std::uint8_t next = 0;
  friend bool operator==(const Lz77Factor&, const Lz77Factor&) = default;
};

struct Lz77Parse {
  std::vector<Lz77Factor> factors;
  std::uint64_t peak_audit_bits = 0;
};

// Greedy online factorization. Each phrase copies the longest prefix of the
// unparsed suffix that occurs entirely inside the parsed prefix, choosing the
// leftmost such occurrence. The parsed prefix is kept reversed in a dynamic
// Huffman-compressed FM-index, so appending a byte is a left extension and
// matching a phrase is a backward search.
Lz77Parse lz77_factorize(std::span<const std::uint8_t> text, std::size_t sample_rate = 8);

// Throws FormatError on a source that is missing or reaches past the
// decoded prefix.
std::vector<std::uint8_t> lz77_decode(std::span<const Lz77Factor> factors);

}  // namespace dynastr
