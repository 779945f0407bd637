// dynastr: BWT / LZ77 transforms in compressed working space, and a
// benchmark harness for the dynamic structures.
//
// Exit codes: 0 ok, 1 usage or I/O error, 2 empty input, 3 malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "dynastr/bench.hpp"
#include "dynastr/compress.hpp"
#include "dynastr/errors.hpp"
#include "dynastr/formats.hpp"
#include "dynastr/space_model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitFormat = 3;

struct ExitCode {
  int code;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw ExitCode{kExitUsage};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> read_nonempty(const std::string& path) {
  auto bytes = read_file(path);
  if (bytes.empty()) {
    std::cerr << "error: '" << path << "' is empty\n";
    throw ExitCode{kExitEmpty};
  }
  return bytes;
}

void write_file(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size))) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw ExitCode{kExitUsage};
  }
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_bwt(const std::string& in, const std::string& out, const std::string& mode) {
  const auto text = read_nonempty(in);
  Stopwatch clock;
  const auto built = dynastr::build_bwt(text, mode == "rle" ? dynastr::BwtMode::kRle : dynastr::BwtMode::kWavelet);
  const auto bytes = dynastr::encode_bwt_file(built.bwt);
  write_file(out, bytes.data(), bytes.size());
  std::cerr << "mode=" << mode << "\n"
            << "input_bytes=" << text.size() << "\n"
            << "peak_audit_bits=" << built.peak_audit_bits << "\n"
            << "wall_ms=" << clock.ms() << "\n";
  return kExitOk;
}

int cmd_unbwt(const std::string& in, const std::string& out) {
  const auto bytes = read_nonempty(in);
  Stopwatch clock;
  const auto text = dynastr::invert_bwt(dynastr::decode_bwt_file(bytes));
  write_file(out, text.data(), text.size());
  std::cerr << "output_bytes=" << text.size() << "\n"
            << "wall_ms=" << clock.ms() << "\n";
  return kExitOk;
}

int cmd_lz77(const std::string& in, const std::string& out, std::size_t sample_rate) {
  const auto text = read_nonempty(in);
  Stopwatch clock;
  const auto parse = dynastr::lz77_factorize(text, sample_rate);
  const auto rendered = dynastr::write_lz77_text(parse.factors);
  write_file(out, rendered.data(), rendered.size());
  std::cerr << "input_bytes=" << text.size() << "\n"
            << "factors=" << parse.factors.size() << "\n"
            << "peak_audit_bits=" << parse.peak_audit_bits << "\n"
            << "wall_ms=" << clock.ms() << "\n";
  return kExitOk;
}

int cmd_unlz77(const std::string& in, const std::string& out) {
  const auto bytes = read_nonempty(in);
  Stopwatch clock;
  const std::string_view view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  const auto text = dynastr::lz77_decode(dynastr::parse_lz77_text(view));
  write_file(out, text.data(), text.size());
  std::cerr << "output_bytes=" << text.size() << "\n"
            << "wall_ms=" << clock.ms() << "\n";
  return kExitOk;
}

int cmd_bench(dynastr::BenchConfig config, bool sweep, const std::string& csv_path) {
  if (!dynastr::is_bench_structure(config.structure)) {
    std::cerr << "error: unknown structure '" << config.structure << "'\n";
    return kExitUsage;
  }
  const std::vector<double> densities = sweep ? dynastr::sweep_densities() : std::vector<double>{config.density};
  std::optional<std::ofstream> file;
  if (!csv_path.empty()) {
    const bool fresh = !std::filesystem::exists(csv_path) || std::filesystem::file_size(csv_path) == 0;
    file.emplace(csv_path, std::ios::app);
    if (!*file) {
      std::cerr << "error: cannot write '" << csv_path << "'\n";
      return kExitUsage;
    }
    if (fresh) *file << dynastr::kBenchCsvHeader << "\n";
  } else {
    std::cout << dynastr::kBenchCsvHeader << "\n";
  }
  std::ostream& sink = file ? static_cast<std::ostream&>(*file) : std::cout;
  Stopwatch clock;
  for (const double d : densities) {
    config.density = d;
    const auto rows = dynastr::run_bench(config);
    for (const auto& row : rows) sink << dynastr::format_csv_row(row) << "\n";
    if (config.structure == "gap_bv" && !rows.empty()) {
      const double f = dynastr::gap_space_model(static_cast<double>(config.n), static_cast<double>(rows.front().ones));
      std::cerr << "density=" << d << " audit_bits=" << rows.front().audit_bits << " fit_ratio="
                << static_cast<double>(rows.front().audit_bits) / f << "\n";
    }
  }
  std::cerr << "wall_ms=" << clock.ms() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic succinct string tools: BWT, LZ77, benchmarks"};
  app.require_subcommand(1);

  std::string input, output, mode = "rle";
  std::size_t sample_rate = 8;

  auto* bwt = app.add_subcommand("bwt", "BWT of a file, built by left extension");
  bwt->add_option("input", input, "Input file")->required();
  bwt->add_option("output", output, "Output BWT file")->required();
  bwt->add_option("--mode", mode, "L column representation")->check(CLI::IsMember({"rle", "wavelet"}));

  auto* unbwt = app.add_subcommand("unbwt", "Invert a BWT file");
  unbwt->add_option("input", input, "Input BWT file")->required();
  unbwt->add_option("output", output, "Output file")->required();

  auto* lz77 = app.add_subcommand("lz77", "Greedy LZ77 factorization (no overlapping sources)");
  lz77->add_option("input", input, "Input file")->required();
  lz77->add_option("output", output, "Output factor file")->required();
  lz77->add_option("--sample-rate", sample_rate, "Suffix-array sample rate of the FM-index")->check(CLI::PositiveNumber);

  auto* unlz77 = app.add_subcommand("unlz77", "Decode an LZ77 factor file");
  unlz77->add_option("input", input, "Input factor file")->required();
  unlz77->add_option("output", output, "Output file")->required();

  dynastr::BenchConfig bench_config;
  bool sweep = false;
  bool no_timing = false;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Build a structure and time its operations; emit CSV rows");
  bench->add_option("--structure", bench_config.structure, "gap_bv|suc_bv|spsi|wt_str|rle_str")->required();
  bench->add_option("--n", bench_config.n, "Number of build inserts")->check(CLI::PositiveNumber);
  bench->add_option("--density", bench_config.density, "Bit density / value scale / run-break rate")
      ->check(CLI::Range(1e-9, 1.0));
  bench->add_option("--ops", bench_config.ops, "Operations timed per kind");
  bench->add_option("--seed", bench_config.seed, "mt19937_64 seed");
  bench->add_option("--csv", csv_path, "Append rows to this CSV (header written if new); default stdout");
  bench->add_flag("--sweep", sweep, "Run the 34 log-spaced densities from 1e-4 to 0.99");
  bench->add_flag("--no-timing", no_timing, "Write mean_ns=0 for byte-reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bwt->parsed()) return cmd_bwt(input, output, mode);
    if (unbwt->parsed()) return cmd_unbwt(input, output);
    if (lz77->parsed()) return cmd_lz77(input, output, sample_rate);
    if (unlz77->parsed()) return cmd_unlz77(input, output);
    bench_config.timing = !no_timing;
    return cmd_bench(bench_config, sweep, csv_path);
  } catch (const ExitCode& e) {
    return e.code;
  } catch (const dynastr::FormatError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() != 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
