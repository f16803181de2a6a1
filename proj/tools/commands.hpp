#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace signedspan::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificate = 1;
inline constexpr int kExitInput = 2;

struct Options {
  std::string in;
  std::string pattern;
  std::string pattern_kind;
  std::string out;
  std::string csv;
  std::string kind;
  std::string n_range;
  std::string d_list;
  std::string delta_list;
  std::optional<int> n;
  std::optional<double> d;
  std::optional<double> m;
  int delta = 2;
  int r = 3;
  int cap = 0;
  int seeds = 1;
  std::uint64_t seed = 0;
  bool shuffled = false;
};

// Result of one command: the record printed on stdout and the exit code.
struct Outcome {
  json record;
  int exit_code = kExitOk;
};

Outcome run_gen(const Options& opt);
Outcome run_embed(const Options& opt);
Outcome run_paths(const Options& opt);
Outcome run_triangles(const Options& opt);
Outcome run_spectrum(const Options& opt);
Outcome run_exact(const Options& opt);
Outcome run_bounds(const Options& opt);
Outcome run_discrepancy(const Options& opt);
Outcome run_sweep(const Options& opt);

// "12:40:4" -> 12,16,...,40; "8,12" -> 8,12; "9" -> 9.
std::vector<int> parse_int_range(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace signedspan::cli
