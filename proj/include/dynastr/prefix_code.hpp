#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynastr {

using Symbol = std::uint32_t;

enum class CodeMode { kFixed, kHuffman, kGamma };

// Codeword bits are read most-significant first: bit k of the path from the
// root is (bits >> (length - 1 - k)) & 1.
struct Codeword {
  std::uint64_t bits = 0;
  std::uint8_t length = 0;

  bool bit(unsigned k) const noexcept { return ((bits >> (length - 1 - k)) & 1u) != 0; }
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Prefix-free code used as a wavelet-tree topology.
///
/// fixed:   ceil(log2 |alphabet|) bits per symbol, assigned in symbol order.
/// huffman: optimal for a frequency table; ties merge the lighter subtree,
///          then the one with the smaller least symbol, then the older one.
/// gamma:   Elias-gamma of (symbol + 1); open alphabet.
class PrefixCode {
 public:
  static PrefixCode fixed(std::span<const Symbol> alphabet);
  static PrefixCode huffman(const std::map<Symbol, std::uint64_t>& frequencies);
  static PrefixCode gamma();

  CodeMode mode() const noexcept { return mode_; }
  std::optional<Codeword> encode(Symbol s) const;
  bool contains(Symbol s) const { return encode(s).has_value(); }

  // Decodes one codeword from a string of '0'/'1'; returns the symbol and
  // the number of characters consumed, or nullopt if no codeword matches.
  std::optional<std::pair<Symbol, std::size_t>> decode(std::string_view bits) const;

  // Explicit codebook (empty for gamma, whose alphabet is open).
  std::map<Symbol, Codeword> codebook() const;

  std::uint64_t audit_bits() const noexcept;

  static std::string to_string(const Codeword& c);

 private:
  PrefixCode() = default;
  void index();

  CodeMode mode_ = CodeMode::kFixed;
  // Codebook: a dense table indexed by symbol (length 0xff marks a hole) when
  // every symbol is small, otherwise a map.
  std::map<Symbol, Codeword> book_;
  std::vector<Codeword> dense_;
};

}  // namespace dynastr
