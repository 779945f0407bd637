#include "dynastr/formats.hpp"

#include <charconv>

#include "dynastr/errors.hpp"

namespace dynastr {

std::vector<std::uint8_t> encode_bwt_file(std::span<const BwtSymbol> bwt) {
  std::vector<std::uint8_t> out;
  out.reserve(bwt.size() + 2);
  for (const BwtSymbol s : bwt) {
    if (s == kTerminator) {
      out.push_back(0x00);
      out.push_back(0x00);
    } else if (s == 0) {
      out.push_back(0x00);
      out.push_back(0x01);
    } else {
      out.push_back(static_cast<std::uint8_t>(s));
    }
  }
  return out;
}

std::vector<BwtSymbol> decode_bwt_file(std::span<const std::uint8_t> bytes) {
  std::vector<BwtSymbol> out;
  out.reserve(bytes.size());
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    if (bytes[k] != 0x00) {
      out.push_back(static_cast<BwtSymbol>(bytes[k]));
      continue;
    }
    if (k + 1 == bytes.size()) throw FormatError("bwt file: dangling escape at end of input");
    const std::uint8_t tag = bytes[++k];
    if (tag == 0x00) {
      out.push_back(kTerminator);
    } else if (tag == 0x01) {
      out.push_back(0);
    } else {
      throw FormatError("bwt file: unknown escape 0x00 " + std::to_string(tag) + " at byte " + std::to_string(k - 1));
    }
  }
  return out;
}

std::string write_lz77_text(std::span<const Lz77Factor> factors) {
  std::string out;
  for (const Lz77Factor& f : factors) {
    out += f.source ? std::to_string(*f.source) : std::string("-");
    out += ',';
    out += std::to_string(f.length);
    out += ',';
    out += std::to_string(f.next);
    out += '\n';
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw FormatError("lz77 text line " + std::to_string(line) + ": bad " + what + " '" + std::string(field) + "'", line);
  }
  return v;
}

}  // namespace

std::vector<Lz77Factor> parse_lz77_text(std::string_view text) {
  std::vector<Lz77Factor> out;
  std::size_t line = 0;
  std::size_t at = 0;
  while (at < text.size()) {
    ++line;
    const std::size_t nl = text.find('\n', at);
    if (nl == std::string_view::npos) {
      throw FormatError("lz77 text line " + std::to_string(line) + ": missing trailing newline", line);
    }
    const std::string_view row = text.substr(at, nl - at);
    at = nl + 1;
    const std::size_t c1 = row.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw FormatError("lz77 text line " + std::to_string(line) + ": expected three comma-separated fields", line);
    }
    Lz77Factor f;
    const std::string_view src = row.substr(0, c1);
    if (src != "-") f.source = parse_number(src, line, "source");
    f.length = parse_number(row.substr(c1 + 1, c2 - c1 - 1), line, "length");
    const std::uint64_t next = parse_number(row.substr(c2 + 1), line, "next byte");
    if (next > 255) {
      throw FormatError("lz77 text line " + std::to_string(line) + ": next byte " + std::to_string(next) + " exceeds 255", line);
    }
    f.next = static_cast<std::uint8_t>(next);
    if ((f.length == 0) != !f.source) {
      throw FormatError("lz77 text line " + std::to_string(line) + ": source must be '-' exactly when length is 0", line);
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace dynastr
