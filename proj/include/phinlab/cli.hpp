#pragma once

// Batch front end: one request in, one report out. The `phinlab` executable
// is a thin wrapper around run_cli.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phinlab/error.hpp"
#include "phinlab/serialize.hpp"

namespace phinlab {

enum class Format { Text, Json };

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct AnalysisRequest {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<long> prime;
  std::optional<std::pair<int, int>> ext;  // (e, f)
  std::uint64_t seed = kDefaultSeed;
  int trials = 0;
  Format format = Format::Json;
  bool consistency = false;
  // fixtures
  std::string kind;
  std::vector<std::string> L;
  int rank = 3;
  std::vector<int> low;
  std::vector<int> high;
  int lowest = -1;
  std::optional<std::string> out;
};

struct Report {
  Json body;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitProperty = 5;

int exit_code_for(ErrorKind kind);

/// Conventions every report states up front.
Json convention_banner();

Report run(const AnalysisRequest& req);
std::string emit(const Report& report, Format format);

struct CliOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Parses argv-style arguments (without the program name), runs, emits.
CliOutcome run_cli(const std::vector<std::string>& args);

}  // namespace phinlab
