#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynastr/prefix_code.hpp"
#include "dynastr/succinct_bitvector.hpp"

namespace dynastr {

/// Dynamic string as a wavelet tree with explicit topology: one node per
/// proper codeword prefix, each owning a succinct bitvector that routes
/// positions left (0) or right (1). Leaves are not materialized; a child link
/// names either another node or the symbol at that leaf. The topology comes
/// from the PrefixCode; with gamma codes nodes appear on first use.
class WaveletString {
 public:
  explicit WaveletString(PrefixCode code);

  std::size_t size() const noexcept { return size_; }
  const PrefixCode& code() const noexcept { return code_; }

  Symbol access(std::size_t i) const;
  Symbol operator[](std::size_t i) const { return access(i); }
  // Throws DomainError for symbols outside a fixed/huffman code.
  std::size_t rank(std::size_t i, Symbol c) const;
  std::size_t select(std::size_t j, Symbol c) const;
  void insert(std::size_t i, Symbol c);
  void push_back(Symbol c) { insert(size_, c); }

  std::uint64_t audit_bits() const noexcept;
  std::size_t node_count() const noexcept { return nodes_.size(); }

  std::vector<Symbol> to_vector() const;

 private:
  // Child link: kNone, a node index (>= 0), or leaf_link(symbol) (<= -2).
  using Link = std::int64_t;
  static constexpr Link kNone = -1;
  static constexpr Link leaf_link(Symbol s) noexcept { return -2 - static_cast<Link>(s); }
  static constexpr Symbol leaf_symbol(Link l) noexcept { return static_cast<Symbol>(-2 - l); }

  struct Node {
    SuccinctBitvector bits;
    Link child[2] = {kNone, kNone};
  };

  Codeword encode_or_throw(Symbol c) const;
  // Follows (or creates) the child of node on bit b; last says the child is
  // the leaf of symbol c.
  Link descend_or_grow(Link node, bool b, bool last, Symbol c);

  PrefixCode code_;
  std::vector<Node> nodes_;
  Link root_ = 0;
  std::size_t size_ = 0;
};

}  // namespace dynastr
