#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dynastr {

inline constexpr const char* kBenchCsvHeader = "structure,n,density,op,mean_ns,ops_measured,audit_bits,seed";

struct BenchConfig {
  std::string structure;  // gap_bv | suc_bv | spsi | wt_str | rle_str
  std::size_t n = 1'000'000;
  double density = 0.1;
  std::size_t ops = 100'000;
  std::uint64_t seed = 1;
  bool timing = true;  // false writes mean_ns = 0 so rows are byte-reproducible
};

struct BenchRow {
  std::string structure;
  std::size_t n = 0;
  double density = 0;
  std::string op;
  double mean_ns = 0;
  std::size_t ops_measured = 0;
  std::uint64_t audit_bits = 0;  // audit after the build, before the op mix
  std::uint64_t seed = 0;
  std::uint64_t ones = 0;        // bitvectors only; not part of the CSV
};

bool is_bench_structure(const std::string& name);

// Builds the structure with n inserts at uniform random positions, then
// times `ops` operations of each kind at uniform random arguments. Inserts
// run last so the query rows all see the same structure.
//   gap_bv, suc_bv: bit is 1 with probability density.
//   spsi:           values uniform in [0, ceil(2/density)).
//   wt_str, rle_str: alphabet of 8; with probability density the inserted
//                   symbol is uniform, otherwise it copies its left neighbour,
//                   so density is the run-break rate.
// Throws UsageError for an unknown structure or a density outside (0, 1].
std::vector<BenchRow> run_bench(const BenchConfig& config);

// The 34 log-spaced densities from 1e-4 to 0.99 used by --sweep.
std::vector<double> sweep_densities();

std::string format_csv_row(const BenchRow& row);

}  // namespace dynastr
