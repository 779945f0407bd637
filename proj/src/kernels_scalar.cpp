#include "dynastr/kernels.hpp"

#include <bit>

namespace dynastr::kernels {

unsigned select_in_word(std::uint64_t word, unsigned j) noexcept {
  // Byte-wise skip, then clear low bits inside the byte.
  unsigned base = 0;
  for (;;) {
    const unsigned c = static_cast<unsigned>(std::popcount(word & 0xffu));
    if (j < c) break;
    j -= c;
    word >>= 8;
    base += 8;
  }
  for (; j > 0; --j) word &= word - 1;
  return base + static_cast<unsigned>(std::countr_zero(word));
}

namespace {

std::uint64_t popcount_scalar(const std::uint64_t* words, std::size_t nwords) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < nwords; ++k) total += static_cast<std::uint64_t>(std::popcount(words[k]));
  return total;
}

std::uint64_t rank1_scalar(const std::uint64_t* words, std::size_t nbits) {
  const std::size_t full = nbits / 64;
  std::uint64_t total = popcount_scalar(words, full);
  if (const unsigned rem = nbits % 64; rem != 0) {
    total += static_cast<std::uint64_t>(std::popcount(words[full] & ((std::uint64_t{1} << rem) - 1)));
  }
  return total;
}

std::size_t select1_scalar(const std::uint64_t* words, std::size_t nwords, std::uint64_t j) {
  for (std::size_t k = 0; k < nwords; ++k) {
    const auto c = static_cast<std::uint64_t>(std::popcount(words[k]));
    if (j < c) return k * 64 + select_in_word(words[k], static_cast<unsigned>(j));
    j -= c;
  }
  return nwords * 64;
}

std::size_t select0_scalar(const std::uint64_t* words, std::size_t nbits, std::uint64_t j) {
  const std::size_t nwords = (nbits + 63) / 64;
  for (std::size_t k = 0; k < nwords; ++k) {
    const std::uint64_t inv = ~words[k];
    const auto c = static_cast<std::uint64_t>(std::popcount(inv));
    if (j < c) return k * 64 + select_in_word(inv, static_cast<unsigned>(j));
    j -= c;
  }
  return nbits;
}

void shift_up_scalar(std::uint64_t* words, std::size_t from, std::size_t nbits, unsigned shift) {
  if (nbits <= from) return;
  const std::size_t lo = from / 64;
  const std::size_t hi = (nbits + shift - 1) / 64;
  const unsigned keep = from % 64;
  const std::uint64_t keep_mask = keep == 0 ? 0 : (std::uint64_t{1} << keep) - 1;
  if (shift == 64) {
    for (std::size_t k = hi; k > lo; --k) words[k] = words[k - 1];
    words[lo] &= keep_mask;
    return;
  }
  for (std::size_t k = hi; k > lo; --k) {
    words[k] = (words[k] << shift) | (words[k - 1] >> (64 - shift));
  }
  const std::uint64_t w = words[lo];
  words[lo] = (w & keep_mask) | ((w << shift) & ~keep_mask);
}

const KernelTable kScalar{
    "scalar", popcount_scalar, rank1_scalar, select1_scalar, select0_scalar, shift_up_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace dynastr::kernels
