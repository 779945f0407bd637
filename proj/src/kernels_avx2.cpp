// Compiled with -mavx2 -mbmi2 -mpopcnt. Only intrinsics are used here so no
// inline library code built for AVX2 can leak into the scalar path.
#include "dynastr/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__BMI2__)
#include <immintrin.h>

namespace dynastr::kernels {
namespace {

// Nibble-LUT popcount; returns per-64-bit-lane counts.
inline __m256i lane_popcount(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t hsum(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

inline unsigned select_in_word_bmi2(std::uint64_t word, unsigned j) {
  return static_cast<unsigned>(_tzcnt_u64(_pdep_u64(std::uint64_t{1} << j, word)));
}

std::uint64_t popcount_avx2(const std::uint64_t* words, std::size_t nwords) {
  std::size_t k = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; k + 4 <= nwords; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + k));
    acc = _mm256_add_epi64(acc, lane_popcount(v));
  }
  std::uint64_t total = hsum(acc);
  for (; k < nwords; ++k) total += static_cast<std::uint64_t>(_mm_popcnt_u64(words[k]));
  return total;
}

std::uint64_t rank1_avx2(const std::uint64_t* words, std::size_t nbits) {
  const std::size_t full = nbits / 64;
  std::uint64_t total = popcount_avx2(words, full);
  if (const unsigned rem = nbits % 64; rem != 0) {
    total += static_cast<std::uint64_t>(_mm_popcnt_u64(_bzhi_u64(words[full], rem)));
  }
  return total;
}

template <bool Invert>
std::size_t select_avx2(const std::uint64_t* words, std::size_t nwords, std::uint64_t j) {
  const __m256i flip = Invert ? _mm256_set1_epi64x(-1) : _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= nwords; k += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + k));
    v = _mm256_xor_si256(v, flip);
    const std::uint64_t c = hsum(lane_popcount(v));
    if (j < c) break;
    j -= c;
  }
  for (; k < nwords; ++k) {
    const std::uint64_t w = Invert ? ~words[k] : words[k];
    const auto c = static_cast<std::uint64_t>(_mm_popcnt_u64(w));
    if (j < c) return k * 64 + select_in_word_bmi2(w, static_cast<unsigned>(j));
    j -= c;
  }
  return nwords * 64;
}

std::size_t select1_avx2(const std::uint64_t* words, std::size_t nwords, std::uint64_t j) {
  return select_avx2<false>(words, nwords, j);
}

std::size_t select0_avx2(const std::uint64_t* words, std::size_t nbits, std::uint64_t j) {
  const std::size_t r = select_avx2<true>(words, (nbits + 63) / 64, j);
  return r > nbits ? nbits : r;
}

void shift_up_avx2(std::uint64_t* words, std::size_t from, std::size_t nbits, unsigned shift) {
  if (nbits <= from) return;
  const std::size_t lo = from / 64;
  const std::size_t hi = (nbits + shift - 1) / 64;
  const __m128i left = _mm_cvtsi32_si128(static_cast<int>(shift));
  const __m128i right = _mm_cvtsi32_si128(static_cast<int>(64 - shift));
  // Top-down in blocks of four words: each block reads only words at or
  // below its own range, which are not yet overwritten.
  std::size_t k = hi;
  while (k >= lo + 4) {
    const std::size_t base = k - 3;
    const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + base));
    const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + base - 1));
    const __m256i out = _mm256_or_si256(_mm256_sll_epi64(cur, left), _mm256_srl_epi64(prev, right));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + base), out);
    k -= 4;
  }
  for (; k > lo; --k) {
    words[k] = (shift == 64 ? 0 : words[k] << shift) | (words[k - 1] >> (64 - shift));
  }
  const unsigned keep = from % 64;
  const std::uint64_t keep_mask = keep == 0 ? 0 : (std::uint64_t{1} << keep) - 1;
  const std::uint64_t w = words[lo];
  words[lo] = (w & keep_mask) | ((shift == 64 ? 0 : w << shift) & ~keep_mask);
}

const KernelTable kAvx2{
    "avx2", popcount_avx2, rank1_avx2, select1_avx2, select0_avx2, shift_up_avx2,
};

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi") &&
                                __builtin_cpu_supports("bmi2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace dynastr::kernels

#else

namespace dynastr::kernels {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace dynastr::kernels

#endif
