#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ctqw {

/// One success-probability series per requested source, sampled on the same steps.
struct SweepTable {
  std::vector<double> times;
  std::optional<std::vector<double>> circuit;
  std::optional<std::vector<double>> oracle;
  std::optional<std::vector<double>> approx;
};

/// %.12g
std::string format_number(double value);

/// Header `step,p_circuit,p_oracle,p_approx` restricted to the present columns.
std::string sweep_csv(const SweepTable& table);

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// run never leaves partial output behind.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ctqw
