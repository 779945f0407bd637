#include "dynastr/packed_block.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

#include "dynastr/errors.hpp"
#include "dynastr/kernels.hpp"

namespace dynastr {

namespace {

unsigned max_width(std::span<const std::uint64_t> values) {
  unsigned w = 1;
  for (const std::uint64_t v : values) w = std::max(w, bitsize(v));
  return w;
}

}  // namespace

std::size_t PackedBlock::words_with_buffer(std::size_t bits) {
  return words_for_bits(bits + bits / 8);
}

PackedBlock::PackedBlock(std::span<const std::uint64_t> values) {
  if (values.empty()) return;
  width_ = static_cast<std::uint8_t>(max_width(values));
  count_ = static_cast<std::uint32_t>(values.size());
  capacity_words_ = static_cast<std::uint16_t>(words_with_buffer(count_ * std::size_t{width_}));
  words_ = std::make_unique<std::uint64_t[]>(capacity_words_);
  for (std::size_t i = 0; i < values.size(); ++i) {
    set(i, values[i]);
    sum_ += values[i];
  }
}

PackedBlock::PackedBlock(const PackedBlock& other)
    : sum_(other.sum_), count_(other.count_), capacity_words_(other.capacity_words_), width_(other.width_) {
  if (capacity_words_ > 0) {
    words_ = std::make_unique<std::uint64_t[]>(capacity_words_);
    std::memcpy(words_.get(), other.words_.get(), capacity_words_ * sizeof(std::uint64_t));
  }
}

PackedBlock& PackedBlock::operator=(const PackedBlock& other) {
  if (this != &other) {
    PackedBlock copy(other);
    *this = std::move(copy);
  }
  return *this;
}

std::uint64_t PackedBlock::get(std::size_t i) const noexcept {
  const std::size_t bit = i * width_;
  const std::size_t w = bit / kWordBits;
  const unsigned off = bit % kWordBits;
  std::uint64_t v = words_[w] >> off;
  if (off + width_ > kWordBits) v |= words_[w + 1] << (kWordBits - off);
  return v & low_mask(width_);
}

void PackedBlock::set(std::size_t i, std::uint64_t v) noexcept {
  const std::size_t bit = i * width_;
  const std::size_t w = bit / kWordBits;
  const unsigned off = bit % kWordBits;
  const std::uint64_t mask = low_mask(width_);
  words_[w] = (words_[w] & ~(mask << off)) | (v << off);
  if (off + width_ > kWordBits) {
    const unsigned spill = kWordBits - off;
    words_[w + 1] = (words_[w + 1] & ~(mask >> spill)) | (v >> spill);
  }
}

std::uint64_t PackedBlock::at(std::size_t i) const {
  if (i >= count_) throw UsageError("PackedBlock::at: index " + std::to_string(i) + " out of range");
  return get(i);
}

std::uint64_t PackedBlock::prefix_sum(std::size_t i) const {
  if (i > count_) throw UsageError("PackedBlock::prefix_sum: prefix longer than block");
  if (i == count_) return sum_;
  if (width_ == 1) return kernels::active().rank1(words_.get(), i);
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < i; ++j) acc += get(j);
  return acc;
}

std::optional<LeafHit> PackedBlock::search(std::uint64_t x) const {
  if (x >= sum_) return std::nullopt;
  if (width_ == 1) {
    const std::size_t pos = kernels::active().select1(words_.get(), capacity_words_, x);
    return LeafHit{pos, x};
  }
  std::uint64_t acc = 0;
  for (std::size_t j = 0;; ++j) {
    const std::uint64_t v = get(j);
    if (acc + v > x) return LeafHit{j, acc};
    acc += v;
  }
}

std::optional<LeafHit> PackedBlock::search_zero(std::uint64_t x) const {
  if (width_ != 1) throw UsageError("PackedBlock::search_zero: elements must be bits");
  if (x >= count_ - sum_) return std::nullopt;
  const std::size_t pos = kernels::active().select0(words_.get(), count_, x);
  return LeafHit{pos, pos - x};
}

std::optional<LeafHit> PackedBlock::search_decremented(std::uint64_t x) const {
  if (sum_ < count_ || x >= sum_ - count_) return std::nullopt;
  std::uint64_t acc = 0;
  std::uint64_t plain = 0;
  for (std::size_t j = 0;; ++j) {
    const std::uint64_t v = get(j);
    if (v == 0) throw UsageError("PackedBlock::search_decremented: zero element");
    if (acc + (v - 1) > x) return LeafHit{j, plain};
    acc += v - 1;
    plain += v;
  }
}

void PackedBlock::ensure_words(std::size_t bits) {
  const std::size_t need = words_for_bits(bits);
  if (need <= capacity_words_) return;
  const std::size_t cap = words_with_buffer(bits);
  if (cap > std::numeric_limits<std::uint16_t>::max()) throw CapacityError("PackedBlock: payload too large");
  auto fresh = std::make_unique<std::uint64_t[]>(cap);
  if (capacity_words_ > 0) std::memcpy(fresh.get(), words_.get(), capacity_words_ * sizeof(std::uint64_t));
  words_ = std::move(fresh);
  capacity_words_ = static_cast<std::uint16_t>(cap);
}

void PackedBlock::repack(unsigned new_width) {
  PackedBlock wider;
  wider.width_ = static_cast<std::uint8_t>(new_width);
  wider.count_ = count_;
  wider.sum_ = sum_;
  wider.capacity_words_ = static_cast<std::uint16_t>(words_with_buffer(count_ * std::size_t{new_width}));
  wider.words_ = std::make_unique<std::uint64_t[]>(wider.capacity_words_);
  for (std::size_t j = 0; j < count_; ++j) wider.set(j, get(j));
  *this = std::move(wider);
}

void PackedBlock::update(std::size_t i, std::int64_t delta) {
  if (i >= count_) throw UsageError("PackedBlock::update: index out of range");
  if (delta == 0) return;
  const std::uint64_t old = get(i);
  std::uint64_t fresh;
  if (delta < 0) {
    const std::uint64_t dec = static_cast<std::uint64_t>(-(delta + 1)) + 1;
    if (dec > old) throw DomainError("PackedBlock::update: element would become negative");
    fresh = old - dec;
  } else {
    const auto inc = static_cast<std::uint64_t>(delta);
    if (old > std::numeric_limits<std::uint64_t>::max() - inc) throw DomainError("PackedBlock::update: overflow");
    fresh = old + inc;
  }
  if (bitsize(fresh) > width_) repack(bitsize(fresh));
  set(i, fresh);
  sum_ = sum_ - old + fresh;
  if (bitsize(old) == width_ && bitsize(fresh) < width_) {
    unsigned w = 1;
    for (std::size_t j = 0; j < count_ && w < width_; ++j) w = std::max(w, bitsize(get(j)));
    if (w < width_) repack(w);
  }
}

void PackedBlock::insert(std::size_t i, std::uint64_t v, std::size_t capacity) {
  if (i > count_) throw UsageError("PackedBlock::insert: position out of range");
  if (count_ >= capacity) throw CapacityError("PackedBlock::insert: block full, split first");
  if (count_ == 0) width_ = static_cast<std::uint8_t>(bitsize(v));
  else if (bitsize(v) > width_) repack(bitsize(v));
  const std::size_t used = count_ * std::size_t{width_};
  ensure_words(used + width_);
  kernels::active().shift_up(words_.get(), i * std::size_t{width_}, used, width_);
  set(i, v);
  ++count_;
  sum_ += v;
}

std::pair<PackedBlock, PackedBlock> PackedBlock::split() const {
  if (count_ < 2) throw UsageError("PackedBlock::split: need at least two elements");
  const auto values = to_vector();
  const std::size_t left = (values.size() + 1) / 2;
  const std::span<const std::uint64_t> all(values);
  return {PackedBlock(all.first(left)), PackedBlock(all.subspan(left))};
}

std::vector<std::uint64_t> PackedBlock::to_vector() const {
  std::vector<std::uint64_t> out(count_);
  for (std::size_t j = 0; j < count_; ++j) out[j] = get(j);
  return out;
}

void PackedBlock::check_invariants() const {
  std::uint64_t s = 0;
  unsigned w = 1;
  for (std::size_t j = 0; j < count_; ++j) {
    const std::uint64_t v = get(j);
    s += v;
    w = std::max(w, bitsize(v));
  }
  if (s != sum_) throw std::logic_error("PackedBlock: cached sum mismatch");
  if (count_ > 0 && w != width_) throw std::logic_error("PackedBlock: width is not minimal");
  const std::size_t bits = count_ * std::size_t{width_};
  if (std::size_t{kWordBits} * capacity_words_ > bits + bits / 8 + kWordBits) {
    throw std::logic_error("PackedBlock: payload exceeds growth bound");
  }
  if (words_for_bits(bits) > capacity_words_) throw std::logic_error("PackedBlock: payload too small");
}

}  // namespace dynastr
