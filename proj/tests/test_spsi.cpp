#include <doctest.h>

#include <numeric>
#include <vector>

#include "dynastr/errors.hpp"
#include "dynastr/rng.hpp"
#include "dynastr/spsi.hpp"

using dynastr::SpsiConfig;
using dynastr::SpsiTree;

namespace {

std::uint64_t prefix(const std::vector<std::uint64_t>& ref, std::size_t i) {
  return std::accumulate(ref.begin(), ref.begin() + static_cast<std::ptrdiff_t>(i), std::uint64_t{0});
}

// Smallest i with prefix(i + 1) > x, by linear scan.
std::size_t naive_search(const std::vector<std::uint64_t>& ref, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    acc += ref[i];
    if (acc > x) return i;
  }
  return ref.size();
}

void replay(SpsiConfig config, std::uint64_t seed, int steps, std::uint64_t value_bound) {
  dynastr::Rng rng(seed);
  SpsiTree tree(config);
  std::vector<std::uint64_t> ref;
  for (int step = 0; step < steps; ++step) {
    const auto op = rng.below(10);
    if (op < 4 || ref.empty()) {
      const std::size_t i = rng.below(ref.size() + 1);
      const std::uint64_t x = rng.below(value_bound);
      tree.insert(i, x);
      ref.insert(ref.begin() + static_cast<std::ptrdiff_t>(i), x);
    } else if (op < 5) {
      const std::size_t i = rng.below(ref.size());
      const std::int64_t delta = static_cast<std::int64_t>(rng.below(value_bound)) - static_cast<std::int64_t>(ref[i] / 2);
      tree.update(i, delta);
      ref[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(ref[i]) + delta);
    } else if (op < 7) {
      const std::size_t i = rng.below(ref.size() + 1);
      REQUIRE(tree.sum(i) == prefix(ref, i));
    } else if (op < 8) {
      const std::size_t i = rng.below(ref.size());
      REQUIRE(tree.at(i) == ref[i]);
    } else {
      const std::uint64_t total = prefix(ref, ref.size());
      if (total == 0) continue;
      const std::uint64_t x = rng.below(total);
      const auto hit = tree.search(x);
      REQUIRE(hit.index == naive_search(ref, x));
      REQUIRE(hit.prefix == prefix(ref, hit.index));
      REQUIRE(hit.value == ref[hit.index]);
    }
    REQUIRE(tree.size() == ref.size());
    if (step % 211 == 0) tree.check_invariants();
  }
  CHECK(tree.to_vector() == ref);
  CHECK(tree.total() == prefix(ref, ref.size()));
  tree.check_invariants();
}

}  // namespace

TEST_CASE("small tree: sums, search, update") {
  SpsiTree t;
  for (const std::uint64_t x : {3, 1, 4, 1, 5, 9, 2, 6}) t.push_back(x);
  CHECK(t.size() == 8);
  CHECK(t.total() == 31);
  CHECK(t.sum(0) == 0);
  CHECK(t.sum(4) == 9);
  CHECK(t.search(0).index == 0);
  CHECK(t.search(3).index == 1);
  CHECK(t.search(30).index == 7);
  CHECK_THROWS_AS(t.search(31), dynastr::NotFound);
  t.update(5, -9);
  CHECK(t.at(5) == 0);
  CHECK(t.search(14).index == 6);  // zero element is skipped
  CHECK_THROWS_AS(t.update(5, -1), dynastr::DomainError);
  CHECK_THROWS_AS(t.insert(10, 1), dynastr::UsageError);
  CHECK_THROWS_AS(t.at(8), dynastr::UsageError);
}

TEST_CASE("complement and decremented searches") {
  SpsiTree bits(SpsiConfig{4, 3});
  for (const std::uint64_t b : {1, 0, 0, 1, 1, 0, 1, 0, 0, 0}) bits.push_back(b);
  CHECK(bits.search_zero(0).index == 1);
  CHECK(bits.search_zero(2).index == 5);
  CHECK(bits.search_zero(5).index == 9);
  CHECK_THROWS_AS(bits.search_zero(6), dynastr::NotFound);

  SpsiTree gaps(SpsiConfig{4, 3});
  for (const std::uint64_t g : {1, 1, 3, 1, 4, 2, 1}) gaps.push_back(g);  // minus one: 0 0 2 0 3 1 0
  CHECK(gaps.search_decremented(0).index == 2);
  CHECK(gaps.search_decremented(1).index == 2);
  CHECK(gaps.search_decremented(2).index == 4);
  CHECK(gaps.search_decremented(5).index == 5);
  CHECK_THROWS_AS(gaps.search_decremented(6), dynastr::NotFound);
}

TEST_CASE("tree grows in height and stays balanced") {
  SpsiTree t(SpsiConfig{4, 3});
  for (std::uint64_t k = 0; k < 500; ++k) t.insert(k / 2, k % 7);
  CHECK(t.height() >= 4);
  CHECK(t.leaf_count() >= 500 / 4);
  t.check_invariants();
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(SpsiTree(SpsiConfig{1, 16}), dynastr::UsageError);
  CHECK_THROWS_AS(SpsiTree(SpsiConfig{256, 1}), dynastr::UsageError);
  CHECK_THROWS_AS(SpsiTree(SpsiConfig{40000, 16}), dynastr::UsageError);
}

TEST_CASE("randomized replay: tiny leaves and fanout force deep trees") { replay(SpsiConfig{4, 3}, 1, 6000, 50); }
TEST_CASE("randomized replay: default packed config") { replay(SpsiConfig::packed(), 2, 20000, 1u << 20); }
TEST_CASE("randomized replay: bits in large leaves") { replay(SpsiConfig{64, 4}, 3, 8000, 2); }

TEST_CASE("audit counter equals a full recount after moves") {
  SpsiTree a;
  for (std::uint64_t k = 0; k < 3000; ++k) a.insert(k % 17, k);
  const auto bits = a.audit_bits();
  SpsiTree b = std::move(a);
  CHECK(b.audit_bits() == bits);
  b.check_invariants();
}
