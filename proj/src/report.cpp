#include "ctqw/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace ctqw {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string sweep_csv(const SweepTable& table) {
  std::vector<const std::vector<double>*> columns;
  std::string out = "step";
  const std::pair<const char*, const std::optional<std::vector<double>>*> named[] = {
      {"p_circuit", &table.circuit}, {"p_oracle", &table.oracle}, {"p_approx", &table.approx}};
  for (const auto& [name, column] : named) {
    if (!column->has_value()) continue;
    if ((*column)->size() != table.times.size()) throw std::invalid_argument("sweep column length mismatch");
    out += ',';
    out += name;
    columns.push_back(&column->value());
  }
  out += '\n';
  for (std::size_t row = 0; row < table.times.size(); ++row) {
    out += std::to_string(row);
    for (const auto* c : columns) {
      out += ',';
      out += format_number((*c)[row]);
    }
    out += '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace ctqw
