#include "dynastr/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "dynastr/errors.hpp"
#include "dynastr/gap_bitvector.hpp"
#include "dynastr/rle_string.hpp"
#include "dynastr/rng.hpp"
#include "dynastr/spsi.hpp"
#include "dynastr/succinct_bitvector.hpp"
#include "dynastr/wavelet_string.hpp"

namespace dynastr {

namespace {

constexpr Symbol kBenchSigma = 8;

// Keeps timed results observable so the loops are not optimized away.
volatile std::uint64_t g_sink = 0;

class Runner {
 public:
  explicit Runner(const BenchConfig& config) : config_(config) {}

  // Times `count` calls of op and appends a row.
  void measure(const std::string& name, std::size_t count, const std::function<std::uint64_t()>& op) {
    std::uint64_t acc = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k) acc += op();
    const auto stop = std::chrono::steady_clock::now();
    g_sink = g_sink + acc;
    BenchRow row;
    row.structure = config_.structure;
    row.n = config_.n;
    row.density = config_.density;
    row.op = name;
    row.ops_measured = count;
    if (config_.timing && count > 0) {
      row.mean_ns = std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(count);
    }
    row.audit_bits = audit_;
    row.seed = config_.seed;
    row.ones = ones_;
    rows_.push_back(std::move(row));
  }

  void set_audit(std::uint64_t bits, std::uint64_t ones = 0) {
    audit_ = bits;
    ones_ = ones;
  }
  std::vector<BenchRow> take() { return std::move(rows_); }

 private:
  const BenchConfig& config_;
  std::uint64_t audit_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<BenchRow> rows_;
};

template <class Bitvector>
std::vector<BenchRow> bench_bitvector(const BenchConfig& cfg, Rng& rng) {
  Bitvector bv;
  for (std::size_t k = 0; k < cfg.n; ++k) bv.insert(rng.below(bv.size() + 1), rng.chance(cfg.density));
  Runner run(cfg);
  run.set_audit(bv.audit_bits(), bv.ones());
  const std::size_t n = bv.size();
  run.measure("access", cfg.ops, [&] { return std::uint64_t{bv.access(rng.below(n))}; });
  run.measure("rank0", cfg.ops, [&] { return bv.rank(rng.below(n + 1), false); });
  run.measure("rank1", cfg.ops, [&] { return bv.rank(rng.below(n + 1), true); });
  const std::size_t zeros = bv.zeros();
  const std::size_t ones = bv.ones();
  run.measure("select0", zeros == 0 ? 0 : cfg.ops, [&] { return bv.select(rng.below(zeros), false); });
  run.measure("select1", ones == 0 ? 0 : cfg.ops, [&] { return bv.select(rng.below(ones), true); });
  run.measure("insert", cfg.ops, [&] {
    bv.insert(rng.below(bv.size() + 1), rng.chance(cfg.density));
    return std::uint64_t{1};
  });
  return run.take();
}

std::vector<BenchRow> bench_spsi(const BenchConfig& cfg, Rng& rng) {
  SpsiTree tree;
  const auto bound = static_cast<std::uint64_t>(std::ceil(2.0 / cfg.density));
  for (std::size_t k = 0; k < cfg.n; ++k) tree.insert(rng.below(tree.size() + 1), rng.below(bound));
  Runner run(cfg);
  run.set_audit(tree.audit_bits());
  const std::size_t m = tree.size();
  const std::uint64_t total = tree.total();
  run.measure("access", cfg.ops, [&] { return tree.at(rng.below(m)); });
  run.measure("sum", cfg.ops, [&] { return tree.sum(rng.below(m + 1)); });
  run.measure("search", total == 0 ? 0 : cfg.ops, [&] { return tree.search(rng.below(total)).index; });
  run.measure("update", cfg.ops, [&] {
    const std::size_t i = rng.below(m);
    tree.update(i, 1);
    return std::uint64_t{i};
  });
  run.measure("insert", cfg.ops, [&] {
    tree.insert(rng.below(tree.size() + 1), rng.below(bound));
    return std::uint64_t{1};
  });
  return run.take();
}

template <class String>
void fill_runs(String& s, const BenchConfig& cfg, Rng& rng) {
  for (std::size_t k = 0; k < cfg.n; ++k) {
    const std::size_t i = rng.below(s.size() + 1);
    Symbol c = static_cast<Symbol>(rng.below(kBenchSigma));
    if (i > 0 && !rng.chance(cfg.density)) c = s.access(i - 1);
    s.insert(i, c);
  }
}

template <class String>
std::vector<BenchRow> bench_string(const BenchConfig& cfg, Rng& rng, String s) {
  fill_runs(s, cfg, rng);
  Runner run(cfg);
  run.set_audit(s.audit_bits());
  const std::size_t n = s.size();
  std::vector<std::size_t> occ(kBenchSigma, 0);
  for (Symbol c = 0; c < kBenchSigma; ++c) occ[c] = s.rank(n, c);
  run.measure("access", cfg.ops, [&] { return std::uint64_t{s.access(rng.below(n))}; });
  run.measure("rank", cfg.ops, [&] { return s.rank(rng.below(n + 1), static_cast<Symbol>(rng.below(kBenchSigma))); });
  run.measure("select", n == 0 ? 0 : cfg.ops, [&] {
    Symbol c;
    do c = static_cast<Symbol>(rng.below(kBenchSigma)); while (occ[c] == 0);
    return s.select(rng.below(occ[c]), c);
  });
  run.measure("insert", cfg.ops, [&] {
    const std::size_t i = rng.below(s.size() + 1);
    Symbol c = static_cast<Symbol>(rng.below(kBenchSigma));
    if (i > 0 && !rng.chance(cfg.density)) c = s.access(i - 1);
    s.insert(i, c);
    return std::uint64_t{1};
  });
  return run.take();
}

std::vector<Symbol> bench_alphabet() {
  std::vector<Symbol> out;
  for (Symbol c = 0; c < kBenchSigma; ++c) out.push_back(c);
  return out;
}

}  // namespace

bool is_bench_structure(const std::string& name) {
  return name == "gap_bv" || name == "suc_bv" || name == "spsi" || name == "wt_str" || name == "rle_str";
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (!is_bench_structure(cfg.structure)) throw UsageError("bench: unknown structure '" + cfg.structure + "'");
  if (!(cfg.density > 0.0 && cfg.density <= 1.0)) throw UsageError("bench: density must be in (0, 1]");
  if (cfg.n == 0) throw UsageError("bench: n must be positive");
  Rng rng(cfg.seed);
  if (cfg.structure == "gap_bv") return bench_bitvector<GapBitvector>(cfg, rng);
  if (cfg.structure == "suc_bv") return bench_bitvector<SuccinctBitvector>(cfg, rng);
  if (cfg.structure == "spsi") return bench_spsi(cfg, rng);
  const auto alphabet = bench_alphabet();
  if (cfg.structure == "wt_str") return bench_string(cfg, rng, WaveletString(PrefixCode::fixed(alphabet)));
  return bench_string(cfg, rng, RleString(PrefixCode::fixed(alphabet)));
}

std::vector<double> sweep_densities() {
  constexpr int kPoints = 34;
  const double lo = std::log(1e-4);
  const double hi = std::log(0.99);
  std::vector<double> out;
  for (int k = 0; k < kPoints; ++k) out.push_back(std::exp(lo + (hi - lo) * k / (kPoints - 1)));
  out.back() = 0.99;
  return out;
}

std::string format_csv_row(const BenchRow& r) {
  char density[32];
  char mean[32];
  std::snprintf(density, sizeof density, "%.6g", r.density);
  std::snprintf(mean, sizeof mean, "%.2f", r.mean_ns);
  return r.structure + "," + std::to_string(r.n) + "," + density + "," + r.op + "," + mean + "," +
         std::to_string(r.ops_measured) + "," + std::to_string(r.audit_bits) + "," + std::to_string(r.seed);
}

}  // namespace dynastr
