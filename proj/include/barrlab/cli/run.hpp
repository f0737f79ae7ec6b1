#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barrlab/io/json_io.hpp"

namespace barrlab::cli {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string command;
  std::vector<std::string> args;  // positional inputs: files or builtin names
  std::vector<std::string> argv;  // echoed into the report

  Card max_size = 3;
  Card depth = 8;
  std::optional<Card> probe_depth;  // defaults to depth
  std::uint64_t search_cap = 100000;
  std::string format = "text";
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 keeps the OpenMP default

  std::string functor;
  std::string monad;
  std::string algebra;
  std::string alphabet;
  std::string partner;  // commute: moore | streams | constant
  std::optional<Card> n;
  std::optional<std::string> state;
  std::optional<std::string> series;  // density: start from this series
};

struct Report {
  io::Json doc;  // the machine-readable report; "timing_ms" is its last field
  int exit_code = 0;
};

/// 0 = every check passed, 1 = counterexample (or no candidate exists),
/// 2 = input or validation error, including checks the guard made impossible.
Report run(const RunConfig& config);

/// The report rendered in the requested format.
std::string render(const Report& report, const std::string& format);

}  // namespace barrlab::cli
