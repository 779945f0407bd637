#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dynastr/packed_block.hpp"

namespace dynastr {

struct SpsiConfig {
  std::uint32_t max_leaf_size = 256;
  std::uint32_t fanout = 16;

  // Integer sequences: small leaves keep per-leaf linear scans cheap.
  static constexpr SpsiConfig packed() noexcept { return {256, 16}; }
  // Bit sequences: leaves of 8192 bits scanned with word popcounts.
  static constexpr SpsiConfig succinct() noexcept { return {8192, 16}; }
};

// Result of a tree search: the element index, the plain sum of all elements
// before it, and the element itself.
struct SearchHit {
  std::size_t index;
  std::uint64_t prefix;
  std::uint64_t value;
};

/// Searchable partial sums with inserts.
///
/// A B-tree whose leaves are PackedBlocks and whose internal nodes keep, per
/// child, the element count and the element sum of that subtree. Every query
/// is a single root-to-leaf descent. Indexing is 0-based: sum(i) adds the
/// first i elements, search(x) returns the smallest i with sum(i + 1) > x.
/// Elements can be updated and inserted but never removed.
class SpsiTree {
 public:
  explicit SpsiTree(SpsiConfig config = SpsiConfig::packed());
  ~SpsiTree();
  SpsiTree(SpsiTree&&) noexcept;
  SpsiTree& operator=(SpsiTree&&) noexcept;
  SpsiTree(const SpsiTree&) = delete;
  SpsiTree& operator=(const SpsiTree&) = delete;

  std::size_t size() const noexcept { return size_; }
  std::uint64_t total() const noexcept { return total_; }
  const SpsiConfig& config() const noexcept { return config_; }

  std::uint64_t sum(std::size_t i) const;
  std::uint64_t at(std::size_t i) const;
  SearchHit search(std::uint64_t x) const;
  // Search over complemented elements; every element must be 0 or 1.
  SearchHit search_zero(std::uint64_t x) const;
  // Search over (element - 1); every element must be at least 1.
  SearchHit search_decremented(std::uint64_t x) const;

  void update(std::size_t i, std::int64_t delta);
  void insert(std::size_t i, std::uint64_t value);
  void push_back(std::uint64_t value) { insert(size_, value); }

  // Bits held by the tree: this object, every node, every leaf header and
  // payload (growth buffers included). Allocator metadata is not counted.
  std::uint64_t audit_bits() const noexcept;

  // Number of internal levels above the leaves (0 while the root is a leaf).
  std::size_t height() const noexcept;
  std::size_t leaf_count() const noexcept;

  std::vector<std::uint64_t> to_vector() const;

  // Recomputes all counters and checks load, balance, and leaf invariants.
  // Throws std::logic_error describing the first violation.
  void check_invariants() const;

 private:
  struct Node;
  struct Split;

  enum class Metric { kPlain, kZeros, kDecremented };
  SearchHit search_impl(std::uint64_t x, Metric metric) const;
  Split insert_into(Node& node, std::size_t i, std::uint64_t value);
  Split insert_into_leaf(std::unique_ptr<PackedBlock>& leaf, std::size_t i, std::uint64_t value);

  SpsiConfig config_;
  std::unique_ptr<PackedBlock> root_leaf_;
  std::unique_ptr<Node> root_;
  std::size_t size_ = 0;
  std::uint64_t total_ = 0;
  std::int64_t allocated_bits_ = 0;
};

}  // namespace dynastr
