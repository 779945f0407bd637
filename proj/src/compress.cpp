#include "dynastr/compress.hpp"

#include <map>
#include <string>

#include "dynastr/errors.hpp"
#include "dynastr/fm_index.hpp"

namespace dynastr {

namespace {

constexpr std::size_t kAuditEvery = 64;

std::map<Symbol, std::uint64_t> byte_frequencies(std::span<const std::uint8_t> text) {
  std::array<std::uint64_t, 256> f{};
  for (const std::uint8_t b : text) ++f[b];
  std::map<Symbol, std::uint64_t> out;
  for (Symbol c = 0; c < 256; ++c) {
    if (f[c] != 0) out.emplace(c, f[c]);
  }
  return out;
}

std::vector<Symbol> byte_alphabet(std::span<const std::uint8_t> text) {
  std::vector<Symbol> out;
  for (const auto& [c, f] : byte_frequencies(text)) out.push_back(c);
  return out;
}

template <class Column>
BwtBuild run_extensions(std::span<const std::uint8_t> text, Column column) {
  DynamicBwt<Column> bwt(std::move(column));
  BwtBuild out;
  for (std::size_t k = text.size(); k-- > 0;) {
    bwt.extend(text[k]);
    if (k % kAuditEvery == 0) out.peak_audit_bits = std::max(out.peak_audit_bits, bwt.audit_bits());
  }
  out.peak_audit_bits = std::max(out.peak_audit_bits, bwt.audit_bits());
  out.bwt = bwt.to_vector();
  return out;
}

}  // namespace

BwtBuild build_bwt(std::span<const std::uint8_t> text, BwtMode mode) {
  if (text.empty()) throw DomainError("build_bwt: empty input");
  if (mode == BwtMode::kRle) {
    const auto alphabet = byte_alphabet(text);
    return run_extensions(text, RleString(PrefixCode::fixed(alphabet)));
  }
  return run_extensions(text, WaveletString(PrefixCode::huffman(byte_frequencies(text))));
}

std::vector<std::uint8_t> invert_bwt(std::span<const BwtSymbol> bwt) {
  std::size_t terminators = 0;
  std::array<std::uint64_t, 256> counts{};
  for (const BwtSymbol s : bwt) {
    if (s == kTerminator) {
      ++terminators;
    } else if (s < 0 || s > 255) {
      throw FormatError("invert_bwt: symbol outside byte range");
    } else {
      ++counts[static_cast<std::size_t>(s)];
    }
  }
  if (terminators != 1) throw FormatError("invert_bwt: expected exactly one terminator, found " + std::to_string(terminators));

  std::array<std::uint64_t, 256> first{};
  std::uint64_t acc = 1;
  for (std::size_t c = 0; c < 256; ++c) {
    first[c] = acc;
    acc += counts[c];
  }
  // lf[row] = first[c] + occurrences of c before row.
  std::vector<std::size_t> lf(bwt.size(), 0);
  std::array<std::uint64_t, 256> seen{};
  for (std::size_t row = 0; row < bwt.size(); ++row) {
    if (bwt[row] == kTerminator) continue;
    const auto c = static_cast<std::size_t>(bwt[row]);
    lf[row] = first[c] + seen[c]++;
  }
  std::vector<std::uint8_t> text(bwt.size() - 1);
  std::size_t row = 0;  // suffix "$"; its L cell is the last text byte
  for (std::size_t k = text.size(); k-- > 0;) {
    text[k] = static_cast<std::uint8_t>(bwt[row]);
    row = lf[row];
  }
  return text;
}

Lz77Parse lz77_factorize(std::span<const std::uint8_t> text, std::size_t sample_rate) {
  if (text.empty()) throw DomainError("lz77_factorize: empty input");
  FmIndex<WaveletString> index(WaveletString(PrefixCode::huffman(byte_frequencies(text))), sample_rate);
  Lz77Parse out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  std::size_t since_audit = 0;
  while (i < n) {
    // Index holds reverse(text[0, i)); matching text[i], text[i+1], ... is a
    // backward search for the reversed phrase.
    RowRange rows = index.full_range();
    std::size_t len = 0;
    while (i + len + 1 < n) {
      const RowRange next = index.step(rows, text[i + len]);
      if (next.empty()) break;
      rows = next;
      ++len;
    }
    Lz77Factor f;
    f.length = len;
    f.next = text[i + len];
    if (len > 0) {
      // A row at reversed-text position p is an occurrence ending at text
      // position i - 1 - p; the leftmost source has the largest p.
      const std::size_t p = index.positions(rows).back();
      f.source = i - p - len;
    }
    out.factors.push_back(f);
    for (std::size_t k = 0; k <= len; ++k) index.extend(text[i + k]);
    i += len + 1;
    since_audit += len + 1;
    if (since_audit >= kAuditEvery) {
      out.peak_audit_bits = std::max(out.peak_audit_bits, index.audit_bits());
      since_audit = 0;
    }
  }
  out.peak_audit_bits = std::max(out.peak_audit_bits, index.audit_bits());
  return out;
}

std::vector<std::uint8_t> lz77_decode(std::span<const Lz77Factor> factors) {
  std::vector<std::uint8_t> text;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Lz77Factor& f = factors[k];
    if (f.length > 0) {
      if (!f.source || *f.source + f.length > text.size()) {
        throw FormatError("lz77_decode: factor " + std::to_string(k) + " copies outside the decoded prefix", k + 1);
      }
      const std::size_t src = *f.source;
      for (std::size_t t = 0; t < f.length; ++t) text.push_back(text[src + t]);
    } else if (f.source) {
      throw FormatError("lz77_decode: factor " + std::to_string(k) + " has a source but no length", k + 1);
    }
    text.push_back(f.next);
  }
  return text;
}

}  // namespace dynastr
