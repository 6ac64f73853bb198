#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpq {

inline constexpr const char* kToolVersion = "0.1.0";

/// Seed used by every subcommand unless --seed is given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Echoed into every CSV/JSON output so a result file identifies the exact
/// run that produced it.
struct RunMeta {
  std::string command;  // canonical flag echo
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 0.0;  // 0 = subcommand default
};

/// Shortest exact decimal round-trip formatting; keeps outputs byte-identical
/// across runs.
std::string format_double(double v);

/// '# key=value' comment block followed by the column header line.
std::string csv_header(const RunMeta& meta, const std::vector<std::string>& columns);

std::string csv_row(const std::vector<std::string>& fields);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a half-written report.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace lpq
