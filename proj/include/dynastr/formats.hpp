#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynastr/compress.hpp"

namespace dynastr {

// BWT file bytes: the terminator is written as 0x00 0x00 and a literal 0x00
// byte as 0x00 0x01; every other byte is written as itself.
std::vector<std::uint8_t> encode_bwt_file(std::span<const BwtSymbol> bwt);
// Throws FormatError on a dangling or unknown escape.
std::vector<BwtSymbol> decode_bwt_file(std::span<const std::uint8_t> bytes);

// LZ77 text format: one factor per line, "source,length,next\n", where source
// is "-" when absent and next is the decimal byte value. Every line, including
// the last, ends in '\n'.
std::string write_lz77_text(std::span<const Lz77Factor> factors);
// Throws FormatError carrying the 1-based line number of the first bad line.
std::vector<Lz77Factor> parse_lz77_text(std::string_view text);

}  // namespace dynastr
