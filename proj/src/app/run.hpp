#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wcm::app {

inline constexpr const char* kToolVersion = "1.0.0";

/// Command-line overrides; unset fields fall back to the problem file, then
/// to the defaults (exponentBound 10, primeBudget 1000, wordLength 3,
/// precisionBits 64, no seed).
struct RunFlags {
  std::optional<int> precisionBits, exponentBound, wordLength;
  std::optional<std::uint64_t> primeBudget, seed;
  bool timings = false;
};

struct RunResult {
  int exitCode = 0;       // 0 done, 2 invalid input, 3 analysis could not finish
  json report;            // empty unless exitCode == 0
  std::string text;       // human-readable summary, or the error message
};

/// Parses, validates and runs one problem file.
RunResult runProblem(const std::string& fileText, const RunFlags& flags, bool color = false);

/// Canonical serialization of a report: sorted keys, two-space indent.
std::string serialize(const json& report);

std::string sha256Hex(const std::string& bytes);

}  // namespace wcm::app
