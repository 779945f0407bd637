#include "dynastr/rle_string.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "dynastr/errors.hpp"

namespace dynastr {

RleString::RleString(PrefixCode head_code) : heads_(std::move(head_code)) {}

namespace {

template <class Entries>
auto find_entry(Entries& entries, Symbol c) {
  return std::lower_bound(entries.begin(), entries.end(), c, [](const auto& e, Symbol s) { return e.first < s; });
}

}  // namespace

const GapBitvector* RleString::run_lengths(Symbol c) const {
  const auto it = find_entry(lengths_, c);
  return it == lengths_.end() || it->first != c ? nullptr : &it->second;
}

GapBitvector& RleString::lengths_for(Symbol c) {
  auto it = find_entry(lengths_, c);
  if (it != lengths_.end() && it->first == c) return it->second;
  if (lengths_.size() == lengths_.capacity()) {
    // Grow by an eighth rather than doubling: every slot is audited.
    const auto at = it - lengths_.begin();
    lengths_.reserve(lengths_.size() + lengths_.size() / 8 + 1);
    it = lengths_.begin() + at;
  }
  return lengths_.emplace(it, c, GapBitvector())->second;
}

Symbol RleString::access(std::size_t i) const {
  if (i >= size_) throw UsageError("RleString::access: position " + std::to_string(i) + " out of range");
  return heads_.access(run_of(i));
}

std::size_t RleString::rank(std::size_t i, Symbol c) const {
  if (i > size_) throw UsageError("RleString::rank: prefix length out of range");
  const GapBitvector* v = run_lengths(c);
  if (v == nullptr || i == 0) return 0;
  const std::size_t run = run_of(i - 1);
  const std::size_t full_runs = heads_.rank(run, c);
  std::size_t count = segment_start(*v, full_runs);
  if (heads_.access(run) == c) count += i - run_start(run);
  return count;
}

std::size_t RleString::select(std::size_t j, Symbol c) const {
  const GapBitvector* v = run_lengths(c);
  if (v == nullptr || j >= v->size()) throw NotFound("RleString::select: rank out of range");
  const std::size_t c_run = v->rank(j, true);
  const std::size_t offset = j - segment_start(*v, c_run);
  return run_start(heads_.select(c_run, c)) + offset;
}

void RleString::insert(std::size_t i, Symbol c) {
  if (i > size_) throw UsageError("RleString::insert: position out of range");
  if (!heads_.code().contains(c)) throw DomainError("RleString::insert: symbol has no run-head codeword");
  GapBitvector& vc = lengths_for(c);

  // Extend a neighbouring c-run: a zero inserted anywhere inside it.
  std::optional<std::size_t> anchor;
  if (i > 0 && heads_.access(run_of(i - 1)) == c) anchor = i - 1;
  else if (i < size_ && heads_.access(run_of(i)) == c) anchor = i;
  if (anchor) {
    const std::size_t run = run_of(*anchor);
    run_ends_.insert(*anchor, false);
    vc.insert(segment_start(vc, heads_.rank(run, c)), false);
    ++size_;
    return;
  }

  if (i == 0 || i == size_ || run_ends_.access(i - 1)) {
    // New run between two runs (or at either end).
    const std::size_t h = run_ends_.rank(i, true);
    const std::size_t before = heads_.rank(h, c);
    heads_.insert(h, c);
    run_ends_.insert(i, true);
    vc.insert(segment_start(vc, before), true);
    ++size_;
    return;
  }

  // i falls strictly inside a run of d != c: d-run [s, i), c, d-run [i, e].
  const std::size_t j = run_of(i);
  const Symbol d = heads_.access(j);
  const std::size_t left = i - run_start(j);
  GapBitvector& vd = lengths_for(d);  // exists: d heads a run
  const std::size_t cut = segment_start(vd, heads_.rank(j, d)) + left - 1;
  vd.delete_zero(cut);
  vd.insert(cut, true);
  run_ends_.delete_zero(i - 1);
  run_ends_.insert(i - 1, true);
  run_ends_.insert(i, true);
  const std::size_t before = heads_.rank(j + 1, c);
  heads_.insert(j + 1, c);
  heads_.insert(j + 2, d);
  vc.insert(segment_start(vc, before), true);
  ++size_;
}

std::uint64_t RleString::audit_bits() const noexcept {
  std::uint64_t bits = 8 * sizeof(RleString) - 8 * (sizeof(WaveletString) + sizeof(GapBitvector));
  bits += heads_.audit_bits() + run_ends_.audit_bits();
  bits += 8 * (lengths_.capacity() - lengths_.size()) * sizeof(LengthsEntry);
  for (const auto& [c, v] : lengths_) bits += v.audit_bits() + 8 * (sizeof(LengthsEntry) - sizeof(GapBitvector));
  return bits;
}

std::vector<Symbol> RleString::to_vector() const {
  std::vector<Symbol> out;
  out.reserve(size_);
  for (std::size_t r = 0; r < runs(); ++r) {
    const Symbol c = heads_.access(r);
    const std::size_t len = (r + 1 == runs() ? size_ : run_start(r + 1)) - run_start(r);
    out.insert(out.end(), len, c);
  }
  return out;
}

}  // namespace dynastr
