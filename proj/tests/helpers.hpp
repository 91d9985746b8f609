#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctqw/circuit.hpp"

namespace testing {

using ctqw::Complex;

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? m : INFINITY;
}

inline double max_abs_diff(const ctqw::StateVector& a, const ctqw::StateVector& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline ctqw::StateVector random_state(int width, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << width);
  double norm2 = 0.0;
  for (auto& z : amps) {
    z = {normal(rng), normal(rng)};
    norm2 += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(norm2);
  return ctqw::StateVector(width, std::move(amps));
}

inline ctqw::StateVector real_state(int width, const std::vector<double>& v) {
  std::vector<Complex> amps(v.begin(), v.end());
  return ctqw::StateVector(width, std::move(amps));
}

/// Dense matrix of I + (e^{i phi} - 1)|j0><j0|.
inline std::vector<Complex> phase_matrix(int width, std::size_t j0, double phi) {
  const std::size_t n = std::size_t{1} << width;
  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  m[j0 * n + j0] = std::polar(1.0, phi);
  return m;
}

/// Reads back the subset of OpenQASM 3 that export_qasm writes.
inline ctqw::Circuit reread_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<ctqw::Circuit> circuit;
  auto qubit_at = [](const std::string& s, std::size_t from) {
    const auto open = s.find('[', from);
    return std::stoi(s.substr(open + 1));
  };
  while (std::getline(in, line)) {
    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 || line.empty()) continue;
    if (line.rfind("qubit[", 0) == 0) {
      circuit.emplace(std::stoi(line.substr(6)));
      continue;
    }
    const auto name_end = line.find_first_of(" (");
    const std::string name = line.substr(0, name_end);
    double angle = 0.0;
    std::size_t rest = name_end;
    if (line[name_end] == '(') {
      const auto close = line.find(')', name_end);
      angle = std::stod(line.substr(name_end + 1, close - name_end - 1));
      rest = close;
    }
    if (name == "gphase") {
      circuit->add_global_phase(angle);
    } else if (name == "cx") {
      const int c = qubit_at(line, rest);
      const int t = qubit_at(line, line.find(',', rest));
      circuit->add(ctqw::Gate::cx(c, t));
    } else {
      const int q = qubit_at(line, rest);
      if (name == "h") circuit->add(ctqw::Gate::h(q));
      else if (name == "x") circuit->add(ctqw::Gate::x(q));
      else if (name == "ry") circuit->add(ctqw::Gate::ry(q, angle));
      else if (name == "rz") circuit->add(ctqw::Gate::rz(q, angle));
      else if (name == "p") circuit->add(ctqw::Gate::phase(q, angle));
      else throw std::runtime_error("unexpected qasm statement: " + line);
    }
  }
  return *circuit;
}

}  // namespace testing
