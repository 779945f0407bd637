#include "dynastr/succinct_bitvector.hpp"

#include <string>

#include "dynastr/errors.hpp"

namespace dynastr {

bool SuccinctBitvector::access(std::size_t i) const {
  if (i >= size()) throw UsageError("SuccinctBitvector::access: position " + std::to_string(i) + " out of range");
  return bits_.at(i) != 0;
}

std::size_t SuccinctBitvector::rank(std::size_t i, bool bit) const {
  if (i > size()) throw UsageError("SuccinctBitvector::rank: prefix length out of range");
  const std::size_t r1 = bits_.sum(i);
  return bit ? r1 : i - r1;
}

std::size_t SuccinctBitvector::select(std::size_t j, bool bit) const {
  if (j >= (bit ? ones() : zeros())) {
    throw NotFound("SuccinctBitvector::select: rank " + std::to_string(j) + " out of range");
  }
  return bit ? bits_.search(j).index : bits_.search_zero(j).index;
}

void SuccinctBitvector::insert(std::size_t i, bool bit) {
  if (i > size()) throw UsageError("SuccinctBitvector::insert: position out of range");
  bits_.insert(i, bit ? 1 : 0);
}

}  // namespace dynastr
