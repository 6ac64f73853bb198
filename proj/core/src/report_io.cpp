#include "lpq/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lpq {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  // %.17g always round-trips; prefer the shorter %.15g when it does too.
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  if (std::strtod(buf, nullptr) != v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  }
  return buf;
}

std::string csv_header(const RunMeta& meta, const std::vector<std::string>& columns) {
  std::string out;
  out += "# lpq version=";
  out += kToolVersion;
  out += "\n# command=" + meta.command + "\n";
  out += "# seed=" + std::to_string(meta.seed) + "\n";
  out += "# tol=" + (meta.tolerance > 0.0 ? format_double(meta.tolerance) : std::string("default")) + "\n";
  out += csv_row(columns);
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i];
  }
  out += "\n";
  return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path() && !target.parent_path().empty()) {
    fs::create_directories(target.parent_path());
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("atomic_write_file: short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace lpq
