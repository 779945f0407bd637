// Acceptance suite: one PASS/FAIL line per criterion, at fixed tolerances.
// Exit status is non-zero when any criterion fails. Pass criterion names as
// arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dynastr/compress.hpp"
#include "dynastr/fm_index.hpp"
#include "dynastr/gap_bitvector.hpp"
#include "dynastr/rle_string.hpp"
#include "dynastr/rng.hpp"
#include "dynastr/space_model.hpp"
#include "dynastr/spsi.hpp"
#include "dynastr/succinct_bitvector.hpp"
#include "dynastr/wavelet_string.hpp"
#include "oracles.hpp"

using namespace dynastr;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ---------------------------------------------------------------------------
// Oracle replays. Every query is compared with a plain array; mismatches are
// counted rather than aborting so the summary shows how many went wrong.

constexpr int kReplayOps = 100'000;

std::size_t replay_spsi(std::uint64_t seed) {
  Rng rng(seed);
  SpsiTree tree;
  std::vector<std::uint64_t> ref;
  std::size_t bad = 0;
  for (int step = 0; step < kReplayOps; ++step) {
    const auto op = rng.below(20);
    if (op < 8 || ref.empty()) {
      const std::size_t i = rng.below(ref.size() + 1);
      const std::uint64_t x = rng.below(1u << (1 + rng.below(20)));
      tree.insert(i, x);
      ref.insert(ref.begin() + static_cast<std::ptrdiff_t>(i), x);
    } else if (op < 10) {
      const std::size_t i = rng.below(ref.size());
      const auto delta = static_cast<std::int64_t>(rng.below(1000)) - static_cast<std::int64_t>(std::min<std::uint64_t>(ref[i], 500));
      tree.update(i, delta);
      ref[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(ref[i]) + delta);
    } else if (op < 13) {
      const std::size_t i = rng.below(ref.size());
      bad += tree.at(i) != ref[i];
    } else if (op < 17) {
      const std::size_t i = rng.below(ref.size() + 1);
      bad += tree.sum(i) != std::accumulate(ref.begin(), ref.begin() + static_cast<std::ptrdiff_t>(i), std::uint64_t{0});
    } else {
      const std::uint64_t total = std::accumulate(ref.begin(), ref.end(), std::uint64_t{0});
      if (total == 0) continue;
      const std::uint64_t x = rng.below(total);
      std::uint64_t acc = 0;
      std::size_t expect = 0;
      while (acc + ref[expect] <= x) acc += ref[expect++];
      const auto hit = tree.search(x);
      bad += hit.index != expect || hit.prefix != acc || hit.value != ref[expect];
    }
  }
  bad += tree.to_vector() != ref;
  return bad;
}

template <class B>
std::size_t replay_bitvector(std::uint64_t seed, double density) {
  Rng rng(seed);
  B bv;
  std::vector<std::uint8_t> ref;
  std::size_t bad = 0;
  for (int step = 0; step < kReplayOps; ++step) {
    const auto op = rng.below(20);
    if (op < 8 || ref.empty()) {
      const std::size_t i = rng.below(ref.size() + 1);
      const bool bit = rng.chance(density);
      bv.insert(i, bit);
      ref.insert(ref.begin() + static_cast<std::ptrdiff_t>(i), bit);
    } else if (op < 11) {
      const std::size_t i = rng.below(ref.size());
      bad += bv.access(i) != (ref[i] != 0);
    } else if (op < 15) {
      const std::size_t i = rng.below(ref.size() + 1);
      const std::uint8_t bit = static_cast<std::uint8_t>(rng.below(2));
      bad += bv.rank(i, bit != 0) != oracle::rank(ref, i, bit);
    } else {
      const std::uint8_t bit = static_cast<std::uint8_t>(rng.below(2));
      const std::size_t have = oracle::rank(ref, ref.size(), bit);
      if (have == 0) continue;
      const std::size_t j = rng.below(have);
      bad += bv.select(j, bit != 0) != *oracle::select(ref, j, bit);
    }
  }
  for (std::size_t i = 0; i < ref.size(); ++i) bad += bv.access(i) != (ref[i] != 0);
  return bad;
}

template <class S>
std::size_t replay_string(S s, Symbol sigma, std::uint64_t seed, double run_bias) {
  Rng rng(seed);
  std::vector<Symbol> ref;
  std::size_t bad = 0;
  for (int step = 0; step < kReplayOps; ++step) {
    const auto op = rng.below(20);
    if (op < 8 || ref.empty()) {
      const std::size_t i = rng.below(ref.size() + 1);
      Symbol c = static_cast<Symbol>(rng.below(sigma));
      if (i > 0 && rng.chance(run_bias)) c = ref[i - 1];
      s.insert(i, c);
      ref.insert(ref.begin() + static_cast<std::ptrdiff_t>(i), c);
    } else if (op < 11) {
      const std::size_t i = rng.below(ref.size());
      bad += s.access(i) != ref[i];
    } else if (op < 15) {
      const std::size_t i = rng.below(ref.size() + 1);
      const Symbol c = static_cast<Symbol>(rng.below(sigma));
      bad += s.rank(i, c) != oracle::rank(ref, i, c);
    } else {
      const Symbol c = static_cast<Symbol>(rng.below(sigma));
      const std::size_t have = oracle::rank(ref, ref.size(), c);
      if (have == 0) continue;
      const std::size_t j = rng.below(have);
      bad += s.select(j, c) != *oracle::select(ref, j, c);
    }
  }
  bad += s.to_vector() != ref;
  return bad;
}

Outcome oracle_equivalence() {
  std::map<std::string, std::size_t> bad;
  bad["spsi"] = replay_spsi(101);
  bad["gap_bv"] = replay_bitvector<GapBitvector>(102, 0.1);
  bad["suc_bv"] = replay_bitvector<SuccinctBitvector>(103, 0.5);
  std::map<Symbol, std::uint64_t> freq;
  for (Symbol c = 0; c < 16; ++c) freq[c] = 1 + (c + 1) * (c + 1);
  bad["wt_str"] = replay_string(WaveletString(PrefixCode::huffman(freq)), 16, 104, 0.0);
  bad["rle_str"] = replay_string(RleString(), 16, 105, 0.8);
  std::size_t total = 0;
  std::string detail;
  for (const auto& [name, b] : bad) {
    total += b;
    detail += name + "=" + std::to_string(b) + " ";
  }
  return {total == 0, detail + "mismatches over " + std::to_string(kReplayOps) + " ops each"};
}

// ---------------------------------------------------------------------------

Outcome exhaustive_bwt() {
  std::size_t strings = 0;
  std::size_t bad = 0;
  for (std::size_t len = 0; len <= 10; ++len) {
    std::vector<std::uint8_t> text(len, 'a');
    for (;;) {
      ++strings;
      const auto expect = oracle::bwt(text);
      if (text.empty()) {
        DynamicBwt<RleString> empty{RleString()};
        bad += empty.to_vector() != expect;
      } else {
        const auto rle = build_bwt(text, BwtMode::kRle);
        const auto wt = build_bwt(text, BwtMode::kWavelet);
        bad += rle.bwt != expect || wt.bwt != expect || invert_bwt(rle.bwt) != text;
      }
      std::size_t k = 0;
      while (k < len && text[k] == 'c') text[k++] = 'a';
      if (k == len) break;
      ++text[k];
    }
  }
  return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(strings) + " strings (sigma=3, length<=10)"};
}

// ---------------------------------------------------------------------------

template <class L>
std::size_t check_fm(const std::vector<std::uint8_t>& text, L column, std::size_t k, Rng& rng) {
  FmIndex<L> fm(std::move(column), k);
  for (std::size_t p = text.size(); p-- > 0;) fm.extend(text[p]);
  std::size_t bad = 0;
  for (int q = 0; q < 100; ++q) {
    std::vector<std::uint8_t> pat;
    if (q % 2 == 0) {
      const std::size_t len = 1 + rng.below(10);
      const std::size_t at = rng.below(text.size() - len + 1);
      pat.assign(text.begin() + static_cast<std::ptrdiff_t>(at), text.begin() + static_cast<std::ptrdiff_t>(at + len));
    } else {
      const std::size_t len = 1 + rng.below(6);
      for (std::size_t c = 0; c < len; ++c) pat.push_back(static_cast<std::uint8_t>('a' + rng.below(4)));
    }
    const auto expect = oracle::occurrences(text, pat);
    bad += fm.count(pat) != expect.size() || fm.locate(pat) != expect;
  }
  return bad;
}

Outcome fm_index() {
  Rng rng(303);
  std::size_t bad = 0;
  std::size_t queries = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::uint8_t> text(1000);
    for (auto& b : text) b = static_cast<std::uint8_t>('a' + rng.below(4));
    for (const std::size_t k : {1, 2, 4, 16}) {
      bad += t % 2 == 0 ? check_fm(text, RleString(), k, rng)
                        : check_fm(text, WaveletString(PrefixCode::fixed(std::vector<Symbol>{'a', 'b', 'c', 'd'})), k, rng);
      queries += 100;
    }
  }
  return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(queries) +
                        " count+locate queries (100 texts, n=1000, sigma=4, k in {1,2,4,16})"};
}

// ---------------------------------------------------------------------------

Outcome lz77() {
  std::size_t bad = 0;
  std::size_t exhaustive = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::vector<std::uint8_t> text(len);
      for (std::size_t k = 0; k < len; ++k) text[k] = (mask >> k) & 1 ? 'b' : 'a';
      const auto parse = lz77_factorize(text, 1 + mask % 4);
      bad += parse.factors != oracle::lz77(text) || lz77_decode(parse.factors) != text;
      ++exhaustive;
    }
  }
  Rng rng(404);
  const unsigned sigmas[] = {2, 4, 26, 256};
  for (int t = 0; t < 100; ++t) {
    const unsigned sigma = sigmas[t % 4];
    std::vector<std::uint8_t> text(10'000);
    for (auto& b : text) b = static_cast<std::uint8_t>(rng.below(sigma));
    const auto parse = lz77_factorize(text);
    bad += parse.factors != oracle::lz77(text) || lz77_decode(parse.factors) != text;
  }
  return {bad == 0, std::to_string(bad) + " mismatches (" + std::to_string(exhaustive) +
                        " exhaustive {a,b} strings of length<=12, 100 random 10^4-byte texts)"};
}

// ---------------------------------------------------------------------------

Outcome spsi_space() {
  Rng rng(505);
  bool pass = true;
  double worst = 0;
  std::string detail;
  for (const std::size_t m : {10'000, 100'000, 1'000'000}) {
    for (const unsigned log_avg : {4u, 10u, 20u}) {
      SpsiTree tree;
      const std::uint64_t bound = std::uint64_t{2} << log_avg;  // uniform in [0, 2·avg)
      for (std::size_t k = 0; k < m; ++k) tree.insert(rng.below(tree.size() + 1), rng.below(bound));
      const double limit = spsi_space_bound(static_cast<double>(m), static_cast<double>(tree.total()));
      const double ratio = static_cast<double>(tree.audit_bits()) / limit;
      worst = std::max(worst, ratio);
      pass = pass && ratio <= 1.0;
      detail += "m=" + std::to_string(m) + ",avg=2^" + std::to_string(log_avg) + ":" + fmt("%.3f", ratio) + " ";
    }
  }
  return {pass, "audit/bound (C=8) " + detail + "worst=" + fmt("%.3f", worst)};
}

Outcome gap_space() {
  Rng rng(606);
  constexpr std::size_t n = 500'000;
  bool pass = true;
  bool flagged = false;
  std::string detail;
  for (const double density : {1e-4, 1e-3, 1e-2, 1e-1}) {
    GapBitvector bv;
    for (std::size_t k = 0; k < n; ++k) bv.insert(rng.below(bv.size() + 1), rng.chance(density));
    const double f = gap_space_model(static_cast<double>(n), static_cast<double>(bv.ones()));
    const double fit = static_cast<double>(bv.audit_bits()) / f;
    pass = pass && fit <= 2.0;
    flagged = flagged || fit > 1.5;
    detail += "b/n=" + fmt("%g", density) + ":b=" + std::to_string(bv.ones()) + ",fit=" + fmt("%.3f", fit) + " ";
  }
  return {pass, "audit/f(n,b) (limit 2.0) " + detail + (flagged ? "[note: fit ratio above 1.5]" : "[fit ratio <= 1.5]")};
}

Outcome succinct_space() {
  Rng rng(707);
  constexpr std::size_t n = 10'000'000;
  bool pass = true;
  std::string detail;
  for (const double density : {0.1, 0.5, 0.9}) {
    SuccinctBitvector bv;
    for (std::size_t k = 0; k < n; ++k) bv.insert(rng.below(bv.size() + 1), rng.chance(density));
    const double per_bit = static_cast<double>(bv.audit_bits()) / static_cast<double>(n);
    pass = pass && per_bit <= 1.25;
    detail += "b/n=" + fmt("%g", density) + ":" + fmt("%.4f", per_bit) + "n ";
  }
  return {pass, "audit (limit 1.25n) " + detail};
}

Outcome crossover() {
  constexpr std::size_t n = 1'000'000;
  std::string detail;
  bool pass = true;
  for (const double density : {0.5, 0.001}) {
    Rng rng(808);
    GapBitvector gap;
    SuccinctBitvector suc;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = rng.below(gap.size() + 1);
      const bool bit = rng.chance(density);
      gap.insert(i, bit);
      suc.insert(i, bit);
    }
    const bool want_suc_smaller = density > 0.1;
    const bool ok = want_suc_smaller ? suc.audit_bits() < gap.audit_bits() : gap.audit_bits() < suc.audit_bits();
    pass = pass && ok;
    detail += "b/n=" + fmt("%g", density) + ":gap=" + std::to_string(gap.audit_bits()) +
              ",suc=" + std::to_string(suc.audit_bits()) + " ";
  }
  return {pass, detail};
}

// Median per-insert latency: inserts at random positions timed in batches.
template <class Build, class Insert>
double median_insert_ns(std::size_t n, std::uint64_t seed, Build build, Insert insert) {
  Rng rng(seed);
  auto s = build();
  for (std::size_t k = 0; k < n; ++k) insert(s, rng);
  constexpr int kBatches = 101;
  constexpr int kBatch = 2000;
  std::vector<double> per_op;
  for (int b = 0; b < kBatches; ++b) {
    const auto t0 = Clock::now();
    for (int k = 0; k < kBatch; ++k) insert(s, rng);
    per_op.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count() / kBatch);
  }
  std::nth_element(per_op.begin(), per_op.begin() + kBatches / 2, per_op.end());
  return per_op[kBatches / 2];
}

Outcome log_scaling() {
  const auto suc_build = [] { return SuccinctBitvector(); };
  const auto suc_insert = [](SuccinctBitvector& s, Rng& rng) { s.insert(rng.below(s.size() + 1), rng.chance(0.5)); };
  const auto spsi_build = [] { return SpsiTree(); };
  const auto spsi_insert = [](SpsiTree& s, Rng& rng) { s.insert(rng.below(s.size() + 1), rng.below(1024)); };
  // Best of three runs at each size damps scheduler noise.
  double suc_small = 1e300, suc_large = 1e300, spsi_small = 1e300, spsi_large = 1e300;
  for (std::uint64_t run = 0; run < 3; ++run) {
    suc_small = std::min(suc_small, median_insert_ns(1'000'000, 900 + run, suc_build, suc_insert));
    suc_large = std::min(suc_large, median_insert_ns(4'000'000, 910 + run, suc_build, suc_insert));
    spsi_small = std::min(spsi_small, median_insert_ns(1'000'000, 920 + run, spsi_build, spsi_insert));
    spsi_large = std::min(spsi_large, median_insert_ns(4'000'000, 930 + run, spsi_build, spsi_insert));
  }
  const double suc_ratio = suc_large / suc_small;
  const double spsi_ratio = spsi_large / spsi_small;
  return {suc_ratio <= 2.0 && spsi_ratio <= 2.0,
          "insert ns 4e6/1e6 (limit 2.0) suc_bv " + fmt("%.1f", suc_large) + "/" + fmt("%.1f", suc_small) + "=" +
              fmt("%.3f", suc_ratio) + " spsi " + fmt("%.1f", spsi_large) + "/" + fmt("%.1f", spsi_small) + "=" +
              fmt("%.3f", spsi_ratio)};
}

Outcome compressed_witness() {
  Rng rng(1001);
  std::vector<std::uint8_t> block(100);
  for (auto& b : block) b = static_cast<std::uint8_t>(rng.below(256));
  std::vector<std::uint8_t> text;
  text.reserve(1'000'000);
  for (int copy = 0; copy < 10'000; ++copy) {
    for (const std::uint8_t b : block) text.push_back(rng.chance(0.01) ? static_cast<std::uint8_t>(rng.below(256)) : b);
  }
  const auto rle = build_bwt(text, BwtMode::kRle);
  const auto wt = build_bwt(text, BwtMode::kWavelet);
  const double input_bits = 8.0 * static_cast<double>(text.size());
  const double vs_input = static_cast<double>(rle.peak_audit_bits) / input_bits;
  const double vs_wavelet = static_cast<double>(rle.peak_audit_bits) / static_cast<double>(wt.peak_audit_bits);
  std::size_t runs = 1;
  for (std::size_t k = 1; k < rle.bwt.size(); ++k) runs += rle.bwt[k] != rle.bwt[k - 1];
  const bool same = rle.bwt == wt.bwt;
  return {same && vs_input <= 0.5 && vs_wavelet <= 0.2,
          "rle peak=" + std::to_string(rle.peak_audit_bits) + " wavelet peak=" + std::to_string(wt.peak_audit_bits) +
              " runs=" + std::to_string(runs) + " rle/input=" + fmt("%.3f", vs_input) + " (limit 0.5) rle/wavelet=" +
              fmt("%.3f", vs_wavelet) + " (limit 0.2)" + (same ? "" : " OUTPUTS DIFFER")};
}

Outcome example_string() {
  const std::string text = "bc#bbbbccccbaaaaaaaaaaa";
  RleString s;
  for (const char c : text) s.push_back(static_cast<Symbol>(c));
  const auto bits = [](const GapBitvector* v) {
    std::string out;
    if (v == nullptr) return std::string("<none>");
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back(v->access(i) ? '1' : '0');
    return out;
  };
  std::string heads;
  for (const Symbol c : s.heads().to_vector()) heads.push_back(static_cast<char>(c));
  const std::map<std::string, std::pair<std::string, std::string>> parts{
      {"H", {heads, "bc#bcba"}},
      {"V_all", {bits(&s.run_ends()), "11100010001100000000001"}},
      {"V_a", {bits(s.run_lengths('a')), "00000000001"}},
      {"V_b", {bits(s.run_lengths('b')), "100011"}},
      {"V_c", {bits(s.run_lengths('c')), "10001"}},
      {"V_#", {bits(s.run_lengths('#')), "1"}},
  };
  bool pass = true;
  std::string detail;
  for (const auto& [name, got_want] : parts) {
    const bool ok = got_want.first == got_want.second;
    pass = pass && ok;
    detail += name + "=" + got_want.first + (ok ? " " : "(want " + got_want.second + ") ");
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle-equivalence", oracle_equivalence},
      {"exhaustive-bwt", exhaustive_bwt},
      {"fm-index", fm_index},
      {"lz77", lz77},
      {"spsi-space", spsi_space},
      {"gap-space", gap_space},
      {"succinct-space", succinct_space},
      {"crossover", crossover},
      {"log-scaling", log_scaling},
      {"compressed-witness", compressed_witness},
      {"example-string", example_string},
  };
  const std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && !only.contains(name)) continue;
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    failures += !out.pass;
    std::printf("%s %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
