#pragma once

// Word-array kernels behind the bit-level leaf operations.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2/BMI2
// variant. The variant is picked once at startup from CPUID; setting
// DYNASTR_KERNELS=scalar in the environment forces the reference path.
// Both tables are reachable directly so tests can check them against each other.

#include <cstddef>
#include <cstdint>

namespace dynastr::kernels {

struct KernelTable {
  const char* name;
  // Set bits in words[0, nwords).
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t nwords);
  // Set bits among the first nbits bits.
  std::uint64_t (*rank1)(const std::uint64_t* words, std::size_t nbits);
  // Bit index of the (j+1)-th set bit. Caller guarantees it exists.
  std::size_t (*select1)(const std::uint64_t* words, std::size_t nwords, std::uint64_t j);
  // Bit index of the (j+1)-th clear bit among the first nbits bits. Caller
  // guarantees it exists.
  std::size_t (*select0)(const std::uint64_t* words, std::size_t nbits, std::uint64_t j);
  // Moves bits [from, nbits) up by shift (1..64) bits. The array must hold
  // nbits + shift bits. Bits in [from, from + shift) are left unspecified.
  void (*shift_up)(std::uint64_t* words, std::size_t from, std::size_t nbits, unsigned shift);
};

const KernelTable& scalar_table() noexcept;

// Null when the build or the CPU lacks AVX2/BMI2/POPCNT.
const KernelTable* avx2_table() noexcept;

// Table used by the data structures.
const KernelTable& active() noexcept;

// In-word select, exposed for tests.
unsigned select_in_word(std::uint64_t word, unsigned j) noexcept;

}  // namespace dynastr::kernels
