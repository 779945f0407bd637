#include "dynastr/wavelet_string.hpp"

#include <string>
#include <utility>

#include "dynastr/errors.hpp"

namespace dynastr {

WaveletString::WaveletString(PrefixCode code) : code_(std::move(code)) {
  if (code_.mode() == CodeMode::kGamma) {
    nodes_.emplace_back();
    return;
  }
  const auto book = code_.codebook();
  if (book.size() == 1 && book.begin()->second.length == 0) {
    root_ = leaf_link(book.begin()->first);
    return;
  }
  nodes_.emplace_back();
  for (const auto& [symbol, cw] : book) {
    Link node = 0;
    for (unsigned k = 0; k < cw.length; ++k) node = descend_or_grow(node, cw.bit(k), k + 1 == cw.length, symbol);
  }
  nodes_.shrink_to_fit();
}

WaveletString::Link WaveletString::descend_or_grow(Link node, bool b, bool last, Symbol c) {
  Link next = nodes_[static_cast<std::size_t>(node)].child[b];
  if (next != kNone) return next;
  if (last) {
    next = leaf_link(c);
  } else {
    nodes_.emplace_back();
    next = static_cast<Link>(nodes_.size() - 1);
  }
  nodes_[static_cast<std::size_t>(node)].child[b] = next;
  return next;
}

Codeword WaveletString::encode_or_throw(Symbol c) const {
  const auto cw = code_.encode(c);
  if (!cw) throw DomainError("WaveletString: symbol " + std::to_string(c) + " has no codeword");
  return *cw;
}

Symbol WaveletString::access(std::size_t i) const {
  if (i >= size_) throw UsageError("WaveletString::access: position " + std::to_string(i) + " out of range");
  Link node = root_;
  while (node >= 0) {
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    const bool b = n.bits.access(i);
    i = n.bits.rank(i, b);
    node = n.child[b];
  }
  return leaf_symbol(node);
}

std::size_t WaveletString::rank(std::size_t i, Symbol c) const {
  if (i > size_) throw UsageError("WaveletString::rank: prefix length out of range");
  const Codeword cw = encode_or_throw(c);
  Link node = root_;
  for (unsigned k = 0; k < cw.length && i > 0; ++k) {
    if (node < 0) return 0;  // gamma path not grown yet
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    const bool b = cw.bit(k);
    i = n.bits.rank(i, b);
    node = n.child[b];
  }
  return i;
}

std::size_t WaveletString::select(std::size_t j, Symbol c) const {
  const Codeword cw = encode_or_throw(c);
  if (cw.length == 0) {
    if (j >= size_) throw NotFound("WaveletString::select: rank out of range");
    return j;
  }
  std::vector<Link> path;
  path.reserve(cw.length);
  Link node = root_;
  for (unsigned k = 0; k < cw.length; ++k) {
    if (node < 0) throw NotFound("WaveletString::select: symbol does not occur");
    path.push_back(node);
    node = nodes_[static_cast<std::size_t>(node)].child[cw.bit(k)];
  }
  if (node == kNone) throw NotFound("WaveletString::select: symbol does not occur");
  for (unsigned k = cw.length; k-- > 0;) {
    j = nodes_[static_cast<std::size_t>(path[k])].bits.select(j, cw.bit(k));
  }
  return j;
}

void WaveletString::insert(std::size_t i, Symbol c) {
  if (i > size_) throw UsageError("WaveletString::insert: position out of range");
  const Codeword cw = encode_or_throw(c);
  Link node = root_;
  for (unsigned k = 0; k < cw.length; ++k) {
    const bool b = cw.bit(k);
    SuccinctBitvector& bits = nodes_[static_cast<std::size_t>(node)].bits;
    bits.insert(i, b);
    i = bits.rank(i, b);
    node = descend_or_grow(node, b, k + 1 == cw.length, c);  // grows only under gamma
  }
  ++size_;
}

std::uint64_t WaveletString::audit_bits() const noexcept {
  std::uint64_t bits = 8 * (sizeof(WaveletString) - sizeof(PrefixCode)) + code_.audit_bits();
  bits += 8 * (nodes_.capacity() - nodes_.size()) * sizeof(Node);
  for (const Node& n : nodes_) bits += n.bits.audit_bits() + 8 * sizeof(n.child);
  return bits;
}

std::vector<Symbol> WaveletString::to_vector() const {
  std::vector<Symbol> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = access(i);
  return out;
}

}  // namespace dynastr
