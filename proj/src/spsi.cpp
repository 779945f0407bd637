#include "dynastr/spsi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "dynastr/errors.hpp"

namespace dynastr {

struct SpsiTree::Node {
  // Per-child element count and element sum. Children are all leaves or all
  // internal nodes; exactly one of the two pointer vectors is non-empty.
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> sums;
  std::vector<std::unique_ptr<Node>> inner;
  std::vector<std::unique_ptr<PackedBlock>> leaves;

  bool bottom() const noexcept { return inner.empty(); }

  // Child arrays are kept at exact capacity: every slot is audited, and
  // growing by one on a split costs O(fanout), no more than the split itself.
  void reserve_one_more() {
    const std::size_t want = sizes.size() + 1;
    sizes.reserve(want);
    sums.reserve(want);
    if (bottom()) leaves.reserve(want);
    else inner.reserve(want);
  }
  void shrink() {
    sizes.shrink_to_fit();
    sums.shrink_to_fit();
    leaves.shrink_to_fit();
    inner.shrink_to_fit();
  }
  std::size_t children() const noexcept { return sizes.size(); }

  std::uint64_t bits() const noexcept {
    const std::size_t slots = sizes.capacity() + sums.capacity() + inner.capacity() + leaves.capacity();
    return 8 * (sizeof(Node) + slots * sizeof(std::uint64_t));
  }

  std::pair<std::uint64_t, std::uint64_t> totals() const noexcept {
    std::uint64_t n = 0;
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      n += sizes[k];
      s += sums[k];
    }
    return {n, s};
  }
};

struct SpsiTree::Split {
  std::unique_ptr<Node> node;
  std::unique_ptr<PackedBlock> leaf;
  explicit operator bool() const noexcept { return node || leaf; }
};

namespace {

std::uint64_t leaf_bits(const std::unique_ptr<PackedBlock>& leaf) {
  return leaf ? leaf->allocated_bits() : 0;
}

}  // namespace

SpsiTree::SpsiTree(SpsiConfig config) : config_(config) {
  if (config_.fanout < 2) throw UsageError("SpsiTree: fanout must be at least 2");
  if (config_.max_leaf_size < 2 || config_.max_leaf_size > (1u << 15)) {
    throw UsageError("SpsiTree: max_leaf_size must lie in [2, 32768]");
  }
  root_leaf_ = std::make_unique<PackedBlock>();
  allocated_bits_ = static_cast<std::int64_t>(root_leaf_->allocated_bits());
}

SpsiTree::~SpsiTree() = default;
SpsiTree::SpsiTree(SpsiTree&&) noexcept = default;
SpsiTree& SpsiTree::operator=(SpsiTree&&) noexcept = default;

std::uint64_t SpsiTree::sum(std::size_t i) const {
  if (i > size_) throw UsageError("SpsiTree::sum: prefix length " + std::to_string(i) + " exceeds size");
  if (i == size_) return total_;
  std::uint64_t acc = 0;
  const Node* node = root_.get();
  const PackedBlock* leaf = root_leaf_.get();
  while (node != nullptr) {
    std::size_t k = 0;
    while (i >= node->sizes[k]) {
      i -= node->sizes[k];
      acc += node->sums[k];
      ++k;
    }
    if (i == 0) return acc;
    if (node->bottom()) {
      leaf = node->leaves[k].get();
      break;
    }
    node = node->inner[k].get();
  }
  return acc + leaf->prefix_sum(i);
}

std::uint64_t SpsiTree::at(std::size_t i) const {
  if (i >= size_) throw UsageError("SpsiTree::at: index " + std::to_string(i) + " out of range");
  const Node* node = root_.get();
  const PackedBlock* leaf = root_leaf_.get();
  while (node != nullptr) {
    std::size_t k = 0;
    while (i >= node->sizes[k]) i -= node->sizes[k++];
    if (node->bottom()) {
      leaf = node->leaves[k].get();
      break;
    }
    node = node->inner[k].get();
  }
  return leaf->at(i);
}

SearchHit SpsiTree::search_impl(std::uint64_t x, Metric metric) const {
  std::uint64_t limit = 0;
  switch (metric) {
    case Metric::kPlain: limit = total_; break;
    case Metric::kZeros: limit = size_ - total_; break;
    case Metric::kDecremented: limit = total_ >= size_ ? total_ - size_ : 0; break;
  }
  if (x >= limit) throw NotFound("SpsiTree::search: target " + std::to_string(x) + " beyond total");

  const auto weight = [metric](std::uint64_t n, std::uint64_t s) -> std::uint64_t {
    switch (metric) {
      case Metric::kPlain: return s;
      case Metric::kZeros: return n - s;
      case Metric::kDecremented: return s - n;
    }
    return s;
  };

  std::size_t base = 0;
  std::uint64_t prefix = 0;
  const Node* node = root_.get();
  const PackedBlock* leaf = root_leaf_.get();
  while (node != nullptr) {
    std::size_t k = 0;
    for (;; ++k) {
      const std::uint64_t w = weight(node->sizes[k], node->sums[k]);
      if (x < w) break;
      x -= w;
      base += node->sizes[k];
      prefix += node->sums[k];
    }
    if (node->bottom()) {
      leaf = node->leaves[k].get();
      break;
    }
    node = node->inner[k].get();
  }

  std::optional<LeafHit> hit;
  switch (metric) {
    case Metric::kPlain: hit = leaf->search(x); break;
    case Metric::kZeros: hit = leaf->search_zero(x); break;
    case Metric::kDecremented: hit = leaf->search_decremented(x); break;
  }
  if (!hit) throw std::logic_error("SpsiTree::search: counters disagree with leaf");
  return {base + hit->index, prefix + hit->prefix, leaf->at(hit->index)};
}

SearchHit SpsiTree::search(std::uint64_t x) const { return search_impl(x, Metric::kPlain); }
SearchHit SpsiTree::search_zero(std::uint64_t x) const { return search_impl(x, Metric::kZeros); }
SearchHit SpsiTree::search_decremented(std::uint64_t x) const { return search_impl(x, Metric::kDecremented); }

void SpsiTree::update(std::size_t i, std::int64_t delta) {
  if (i >= size_) throw UsageError("SpsiTree::update: index " + std::to_string(i) + " out of range");
  if (delta == 0) return;
  std::vector<std::pair<Node*, std::size_t>> path;
  Node* node = root_.get();
  PackedBlock* leaf = root_leaf_.get();
  while (node != nullptr) {
    std::size_t k = 0;
    while (i >= node->sizes[k]) i -= node->sizes[k++];
    path.emplace_back(node, k);
    if (node->bottom()) {
      leaf = node->leaves[k].get();
      break;
    }
    node = node->inner[k].get();
  }
  const std::uint64_t before = leaf->allocated_bits();
  leaf->update(i, delta);  // throws before any counter moves
  allocated_bits_ += static_cast<std::int64_t>(leaf->allocated_bits()) - static_cast<std::int64_t>(before);
  for (auto& [n, k] : path) n->sums[k] += static_cast<std::uint64_t>(delta);
  total_ += static_cast<std::uint64_t>(delta);
}

SpsiTree::Split SpsiTree::insert_into_leaf(std::unique_ptr<PackedBlock>& leaf, std::size_t i, std::uint64_t value) {
  const std::uint64_t before = leaf->allocated_bits();
  Split out;
  if (leaf->size() >= config_.max_leaf_size) {
    auto [left, right] = leaf->split();
    if (i <= left.size()) {
      left.insert(i, value, config_.max_leaf_size);
    } else {
      right.insert(i - left.size(), value, config_.max_leaf_size);
    }
    leaf = std::make_unique<PackedBlock>(std::move(left));
    out.leaf = std::make_unique<PackedBlock>(std::move(right));
  } else {
    leaf->insert(i, value, config_.max_leaf_size);
  }
  allocated_bits_ += static_cast<std::int64_t>(leaf->allocated_bits() + leaf_bits(out.leaf)) -
                     static_cast<std::int64_t>(before);
  return out;
}

SpsiTree::Split SpsiTree::insert_into(Node& node, std::size_t i, std::uint64_t value) {
  std::size_t k = 0;
  while (i > node.sizes[k]) i -= node.sizes[k++];

  Split child = node.bottom() ? insert_into_leaf(node.leaves[k], i, value) : insert_into(*node.inner[k], i, value);
  if (!child) {
    node.sizes[k] += 1;
    node.sums[k] += value;
    return {};
  }

  const auto pos = static_cast<std::ptrdiff_t>(k + 1);
  const std::uint64_t before = node.bits();
  node.reserve_one_more();
  if (child.leaf) {
    node.sizes[k] = node.leaves[k]->size();
    node.sums[k] = node.leaves[k]->sum();
    node.sizes.insert(node.sizes.begin() + pos, child.leaf->size());
    node.sums.insert(node.sums.begin() + pos, child.leaf->sum());
    node.leaves.insert(node.leaves.begin() + pos, std::move(child.leaf));
  } else {
    std::tie(node.sizes[k], node.sums[k]) = node.inner[k]->totals();
    const auto [n, s] = child.node->totals();
    node.sizes.insert(node.sizes.begin() + pos, n);
    node.sums.insert(node.sums.begin() + pos, s);
    node.inner.insert(node.inner.begin() + pos, std::move(child.node));
  }
  if (node.children() <= config_.fanout) {
    allocated_bits_ += static_cast<std::int64_t>(node.bits()) - static_cast<std::int64_t>(before);
    return {};
  }

  // Overflow: move the upper half of the children into a new sibling.
  const std::size_t keep = (node.children() + 1) / 2;
  auto sibling = std::make_unique<Node>();
  sibling->sizes.assign(node.sizes.begin() + static_cast<std::ptrdiff_t>(keep), node.sizes.end());
  sibling->sums.assign(node.sums.begin() + static_cast<std::ptrdiff_t>(keep), node.sums.end());
  node.sizes.resize(keep);
  node.sums.resize(keep);
  if (node.bottom()) {
    sibling->leaves.reserve(node.leaves.size() - keep);
    for (std::size_t c = keep; c < node.leaves.size(); ++c) sibling->leaves.push_back(std::move(node.leaves[c]));
    node.leaves.resize(keep);
  } else {
    sibling->inner.reserve(node.inner.size() - keep);
    for (std::size_t c = keep; c < node.inner.size(); ++c) sibling->inner.push_back(std::move(node.inner[c]));
    node.inner.resize(keep);
  }
  node.shrink();
  allocated_bits_ += static_cast<std::int64_t>(node.bits() + sibling->bits()) - static_cast<std::int64_t>(before);
  Split out;
  out.node = std::move(sibling);
  return out;
}

void SpsiTree::insert(std::size_t i, std::uint64_t value) {
  if (i > size_) throw UsageError("SpsiTree::insert: position " + std::to_string(i) + " exceeds size");
  if (root_leaf_) {
    Split s = insert_into_leaf(root_leaf_, i, value);
    if (s.leaf) {
      auto root = std::make_unique<Node>();
      root->leaves.reserve(2);
      root->sizes = {root_leaf_->size(), s.leaf->size()};
      root->sums = {root_leaf_->sum(), s.leaf->sum()};
      root->leaves.push_back(std::move(root_leaf_));
      root->leaves.push_back(std::move(s.leaf));
      allocated_bits_ += static_cast<std::int64_t>(root->bits());
      root_ = std::move(root);
    }
  } else {
    Split s = insert_into(*root_, i, value);
    if (s.node) {
      auto root = std::make_unique<Node>();
      root->inner.reserve(2);
      const auto [ln, ls] = root_->totals();
      const auto [rn, rs] = s.node->totals();
      root->sizes = {ln, rn};
      root->sums = {ls, rs};
      root->inner.push_back(std::move(root_));
      root->inner.push_back(std::move(s.node));
      allocated_bits_ += static_cast<std::int64_t>(root->bits());
      root_ = std::move(root);
    }
  }
  ++size_;
  total_ += value;
}

std::uint64_t SpsiTree::audit_bits() const noexcept {
  return 8 * sizeof(SpsiTree) + static_cast<std::uint64_t>(allocated_bits_);
}

std::size_t SpsiTree::height() const noexcept {
  std::size_t h = 0;
  for (const Node* node = root_.get(); node != nullptr; node = node->bottom() ? nullptr : node->inner[0].get()) ++h;
  return h;
}

std::size_t SpsiTree::leaf_count() const noexcept {
  if (root_leaf_) return 1;
  std::size_t count = 0;
  std::vector<const Node*> stack{root_.get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->bottom()) {
      count += node->leaves.size();
    } else {
      for (const auto& c : node->inner) stack.push_back(c.get());
    }
  }
  return count;
}

std::vector<std::uint64_t> SpsiTree::to_vector() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  const auto append = [&out](const PackedBlock& leaf) {
    const auto v = leaf.to_vector();
    out.insert(out.end(), v.begin(), v.end());
  };
  if (root_leaf_) {
    append(*root_leaf_);
    return out;
  }
  // Iterative in-order walk.
  std::vector<std::pair<const Node*, std::size_t>> stack{{root_.get(), 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == node->children()) {
      stack.pop_back();
      continue;
    }
    const std::size_t k = next++;
    if (node->bottom()) {
      append(*node->leaves[k]);
    } else {
      stack.emplace_back(node->inner[k].get(), 0);
    }
  }
  return out;
}

void SpsiTree::check_invariants() const {
  std::uint64_t bits = 0;
  if (root_leaf_) {
    root_leaf_->check_invariants();
    if (root_leaf_->size() != size_ || root_leaf_->sum() != total_) throw std::logic_error("SpsiTree: root totals");
    if (root_leaf_->size() > config_.max_leaf_size) throw std::logic_error("SpsiTree: root leaf overfull");
    bits = root_leaf_->allocated_bits();
  } else {
    std::size_t leaf_depth = 0;
    bool depth_seen = false;
    struct Totals {
      std::uint64_t n, s;
    };
    const auto visit = [&](const auto& self, const Node& node, std::size_t depth, bool is_root) -> Totals {
      bits += node.bits();
      const std::size_t c = node.children();
      if (c > config_.fanout) throw std::logic_error("SpsiTree: node exceeds fanout");
      if (is_root ? c < 2 : c < (config_.fanout + 1) / 2) throw std::logic_error("SpsiTree: node underfull");
      if (node.sums.size() != c || (node.bottom() ? node.leaves.size() : node.inner.size()) != c) {
        throw std::logic_error("SpsiTree: node arrays inconsistent");
      }
      Totals t{0, 0};
      for (std::size_t k = 0; k < c; ++k) {
        Totals child{};
        if (node.bottom()) {
          const PackedBlock& leaf = *node.leaves[k];
          leaf.check_invariants();
          bits += leaf.allocated_bits();
          if (leaf.size() < config_.max_leaf_size / 2 || leaf.size() > config_.max_leaf_size) {
            throw std::logic_error("SpsiTree: leaf load out of bounds");
          }
          if (!depth_seen) {
            leaf_depth = depth;
            depth_seen = true;
          } else if (leaf_depth != depth) {
            throw std::logic_error("SpsiTree: leaves at unequal depth");
          }
          child = {leaf.size(), leaf.sum()};
        } else {
          child = self(self, *node.inner[k], depth + 1, false);
        }
        if (child.n != node.sizes[k] || child.s != node.sums[k]) throw std::logic_error("SpsiTree: stale counter");
        t.n += child.n;
        t.s += child.s;
      }
      return t;
    };
    const Totals t = visit(visit, *root_, 1, true);
    if (t.n != size_ || t.s != total_) throw std::logic_error("SpsiTree: root totals");
  }
  if (bits != static_cast<std::uint64_t>(allocated_bits_)) throw std::logic_error("SpsiTree: audit counter drifted");
}

}  // namespace dynastr
