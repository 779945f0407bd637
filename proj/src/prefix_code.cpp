#include "dynastr/prefix_code.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <tuple>

#include "dynastr/errors.hpp"

namespace dynastr {

namespace {

constexpr std::uint8_t kHole = 0xff;
constexpr Symbol kDenseLimit = 1u << 16;

}  // namespace

PrefixCode PrefixCode::fixed(std::span<const Symbol> alphabet) {
  std::vector<Symbol> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw DomainError("PrefixCode::fixed: empty alphabet");
  PrefixCode code;
  code.mode_ = CodeMode::kFixed;
  const auto width = static_cast<std::uint8_t>(std::bit_width(sorted.size() - 1));
  for (std::size_t r = 0; r < sorted.size(); ++r) code.book_[sorted[r]] = Codeword{r, width};
  code.index();
  return code;
}

PrefixCode PrefixCode::huffman(const std::map<Symbol, std::uint64_t>& frequencies) {
  if (frequencies.empty()) throw DomainError("PrefixCode::huffman: empty frequency table");
  struct Tree {
    int child[2];
    Symbol symbol;
  };
  // (weight, least symbol in subtree, creation order, tree index)
  using Item = std::tuple<std::uint64_t, Symbol, std::size_t, int>;
  std::vector<Tree> trees;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (const auto& [s, f] : frequencies) {
    trees.push_back({{-1, -1}, s});
    heap.emplace(f, s, trees.size() - 1, static_cast<int>(trees.size() - 1));
  }
  while (heap.size() > 1) {
    const auto [w0, s0, o0, t0] = heap.top();
    heap.pop();
    const auto [w1, s1, o1, t1] = heap.top();
    heap.pop();
    trees.push_back({{t0, t1}, std::min(s0, s1)});
    heap.emplace(w0 + w1, std::min(s0, s1), trees.size() - 1, static_cast<int>(trees.size() - 1));
  }

  PrefixCode code;
  code.mode_ = CodeMode::kHuffman;
  std::vector<std::pair<int, Codeword>> stack{{std::get<3>(heap.top()), Codeword{}}};
  while (!stack.empty()) {
    const auto [t, cw] = stack.back();
    stack.pop_back();
    const Tree& node = trees[static_cast<std::size_t>(t)];
    if (node.child[0] < 0) {
      code.book_[node.symbol] = cw;
      continue;
    }
    if (cw.length >= 64) throw DomainError("PrefixCode::huffman: code longer than 64 bits");
    for (int b = 0; b < 2; ++b) {
      stack.emplace_back(node.child[b], Codeword{(cw.bits << 1) | static_cast<unsigned>(b),
                                                 static_cast<std::uint8_t>(cw.length + 1)});
    }
  }
  code.index();
  return code;
}

PrefixCode PrefixCode::gamma() {
  PrefixCode code;
  code.mode_ = CodeMode::kGamma;
  return code;
}

void PrefixCode::index() {
  const Symbol top = book_.rbegin()->first;
  if (top >= kDenseLimit) return;
  dense_.assign(top + std::size_t{1}, Codeword{0, kHole});
  for (const auto& [s, cw] : book_) dense_[s] = cw;
  book_.clear();
}

std::map<Symbol, Codeword> PrefixCode::codebook() const {
  if (dense_.empty()) return book_;
  std::map<Symbol, Codeword> out;
  for (Symbol s = 0; s < dense_.size(); ++s) {
    if (dense_[s].length != kHole) out.emplace_hint(out.end(), s, dense_[s]);
  }
  return out;
}

std::optional<Codeword> PrefixCode::encode(Symbol s) const {
  if (mode_ == CodeMode::kGamma) {
    if (s == ~Symbol{0}) return std::nullopt;
    const std::uint64_t x = std::uint64_t{s} + 1;
    return Codeword{x, static_cast<std::uint8_t>(2 * std::bit_width(x) - 1)};
  }
  if (!dense_.empty()) {
    if (s >= dense_.size() || dense_[s].length == kHole) return std::nullopt;
    return dense_[s];
  }
  const auto it = book_.find(s);
  if (it == book_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Symbol, std::size_t>> PrefixCode::decode(std::string_view bits) const {
  if (mode_ == CodeMode::kGamma) {
    std::size_t zeros = 0;
    while (zeros < bits.size() && bits[zeros] == '0') ++zeros;
    const std::size_t len = 2 * zeros + 1;
    if (zeros > 32 || bits.size() < len) return std::nullopt;
    std::uint64_t x = 0;
    for (std::size_t k = zeros; k < len; ++k) x = (x << 1) | (bits[k] == '1' ? 1u : 0u);
    return std::pair{static_cast<Symbol>(x - 1), len};
  }
  for (const auto& [s, cw] : codebook()) {
    if (bits.size() >= cw.length && bits.substr(0, cw.length) == to_string(cw)) return std::pair{s, std::size_t{cw.length}};
  }
  return std::nullopt;
}

std::uint64_t PrefixCode::audit_bits() const noexcept {
  // Map nodes carry three pointers and a colour word besides the entry.
  const std::uint64_t map_bytes = book_.size() * (sizeof(std::pair<const Symbol, Codeword>) + 32);
  return 8 * (sizeof(PrefixCode) + map_bytes + dense_.capacity() * sizeof(Codeword));
}

std::string PrefixCode::to_string(const Codeword& c) {
  std::string out;
  for (unsigned k = 0; k < c.length; ++k) out.push_back(c.bit(k) ? '1' : '0');
  return out;
}

}  // namespace dynastr
