#include "ctqw/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ctqw {

Circuit basis_state_phase_gate(int width, std::size_t j0, double phi) {
  Circuit c(width);
  if (j0 >= (std::size_t{1} << width)) {
    throw std::out_of_range("basis index outside register");
  }
  std::vector<Control> controls;
  for (int q = 1; q < width; ++q) {
    controls.push_back({q, ((j0 >> q) & 1U) ? Polarity::OnOne : Polarity::OnZero});
  }
  const bool flip = (j0 & 1U) == 0;
  if (flip) c.add(Gate::x(0));
  c.add(Gate::phase(0, phi).controlled_by(std::move(controls)));
  if (flip) c.add(Gate::x(0));
  return c;
}

namespace {

// Emits basic gates into `out`. Controls handed to the helpers below are all
// active-on-1; polarity is normalised in emit().
class Decomposer {
 public:
  explicit Decomposer(int width) : out_(width), width_(width) {}

  Circuit take() { return std::move(out_); }

  void add_phase(double phi) { out_.add_global_phase(phi); }

  void emit(const Gate& g) {
    std::vector<int> controls;
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::OnZero) out_.add(Gate::x(c.qubit));
      controls.push_back(c.qubit);
    }
    emit_positive(g, controls);
    for (const auto& c : g.controls) {
      if (c.polarity == Polarity::OnZero) out_.add(Gate::x(c.qubit));
    }
  }

 private:
  void emit_positive(const Gate& g, const std::vector<int>& controls) {
    const int t = g.target;
    switch (g.kind) {
      case GateKind::X:
      case GateKind::CX:
        mcx(controls, t);
        return;
      case GateKind::Ry:
      case GateKind::Rz:
        if (controls.empty()) {
          out_.add({g.kind, t, g.angle, {}});
        } else {
          mc_rotation(g.kind, g.angle, controls, t);
        }
        return;
      case GateKind::Rx:
        out_.add(Gate::h(t));
        if (controls.empty()) {
          out_.add(Gate::rz(t, g.angle));
        } else {
          mc_rotation(GateKind::Rz, g.angle, controls, t);
        }
        out_.add(Gate::h(t));
        return;
      case GateKind::H:
        // H = e^{i pi/2} Ry(pi/2) Rz(pi)
        if (controls.empty()) {
          out_.add(Gate::h(t));
        } else {
          mc_rotation(GateKind::Rz, kPi, controls, t);
          mc_rotation(GateKind::Ry, kPi / 2.0, controls, t);
          controlled_scalar(kPi / 2.0, controls);
        }
        return;
      case GateKind::Phase:
        mc_phase(g.angle, controls, t);
        return;
      case GateKind::GlobalPhase:
        if (controls.empty()) {
          out_.add(Gate::global_phase(g.angle));
        } else {
          controlled_scalar(g.angle, controls);
        }
        return;
    }
  }

  // e^{i phi} on the subspace where all `controls` are 1.
  void controlled_scalar(double phi, const std::vector<int>& controls) {
    std::vector<int> rest(controls.begin(), controls.end() - 1);
    mc_phase(phi, rest, controls.back());
  }

  void mc_phase(double phi, const std::vector<int>& controls, int t) {
    if (controls.empty()) {
      out_.add(Gate::phase(t, phi));
      return;
    }
    if (controls.size() == 1) {
      const int c = controls.front();
      out_.add(Gate::phase(c, phi / 2.0));
      out_.add(Gate::cx(c, t));
      out_.add(Gate::phase(t, -phi / 2.0));
      out_.add(Gate::cx(c, t));
      out_.add(Gate::phase(t, phi / 2.0));
      return;
    }
    // P(phi) = e^{i phi/2} Rz(phi); the scalar is a phase on the last control.
    mc_rotation(GateKind::Rz, phi, controls, t);
    controlled_scalar(phi / 2.0, controls);
  }

  // Controlled R(theta) for R in {Ry, Rz} with R(theta) = A X B X, A = R(theta/2),
  // B = R(-theta/2), AB = I. The last control drives A and B; the others drive
  // the two X gates, borrowing the last control as a dirty ancilla.
  void mc_rotation(GateKind kind, double theta, const std::vector<int>& controls, int t) {
    if (controls.size() == 1) {
      const int c = controls.front();
      out_.add({kind, t, theta / 2.0, {}});
      out_.add(Gate::cx(c, t));
      out_.add({kind, t, -theta / 2.0, {}});
      out_.add(Gate::cx(c, t));
      return;
    }
    const int last = controls.back();
    std::vector<int> rest(controls.begin(), controls.end() - 1);
    mcx(rest, t);
    mc_rotation(kind, -theta / 2.0, {last}, t);
    mcx(rest, t);
    mc_rotation(kind, theta / 2.0, {last}, t);
  }

  std::vector<int> free_qubits(const std::vector<int>& used, int t) const {
    std::vector<int> free;
    for (int q = 0; q < width_; ++q) {
      if (q != t && std::find(used.begin(), used.end(), q) == used.end()) free.push_back(q);
    }
    return free;
  }

  void mcx(const std::vector<int>& controls, int t) {
    const std::size_t k = controls.size();
    if (k == 0) {
      out_.add(Gate::x(t));
      return;
    }
    if (k == 1) {
      out_.add(Gate::cx(controls.front(), t));
      return;
    }
    if (k == 2) {
      toffoli(controls[0], controls[1], t);
      return;
    }
    const auto free = free_qubits(controls, t);
    if (free.size() >= k - 2) {
      toffoli_chain(controls, t, free);
      return;
    }
    if (!free.empty()) {
      // Split the controls; each half uses the other as borrowed ancillas.
      const int a = free.front();
      const std::size_t m1 = (k + 1) / 2;
      std::vector<int> first(controls.begin(), controls.begin() + static_cast<std::ptrdiff_t>(m1));
      std::vector<int> second(controls.begin() + static_cast<std::ptrdiff_t>(m1), controls.end());
      second.push_back(a);
      mcx(first, a);
      mcx(second, t);
      mcx(first, a);
      mcx(second, t);
      return;
    }
    // No spare wire: X = e^{i pi/2} H Rz(pi) H.
    out_.add(Gate::h(t));
    mc_rotation(GateKind::Rz, kPi, controls, t);
    out_.add(Gate::h(t));
    controlled_scalar(kPi / 2.0, controls);
  }

  // k-controlled X using k-2 borrowed (dirty) ancillas; 4(k-2) Toffolis.
  void toffoli_chain(const std::vector<int>& c, int t, const std::vector<int>& a) {
    const std::size_t k = c.size();
    const auto step = [&](std::size_t i) {  // i in [2, k-1]
      toffoli(c[i], a[i - 2], i == k - 1 ? t : a[i - 1]);
    };
    const auto sweep = [&](std::size_t top) {
      for (std::size_t i = top; i >= 2; --i) step(i);
      toffoli(c[0], c[1], a[0]);
      for (std::size_t i = 2; i <= top; ++i) step(i);
    };
    sweep(k - 1);
    sweep(k - 2);
  }

  void toffoli(int a, int b, int t) {
    const double q = kPi / 4.0;
    out_.add(Gate::h(t));
    out_.add(Gate::cx(b, t));
    out_.add(Gate::phase(t, -q));
    out_.add(Gate::cx(a, t));
    out_.add(Gate::phase(t, q));
    out_.add(Gate::cx(b, t));
    out_.add(Gate::phase(t, -q));
    out_.add(Gate::cx(a, t));
    out_.add(Gate::phase(b, q));
    out_.add(Gate::phase(t, q));
    out_.add(Gate::h(t));
    out_.add(Gate::cx(a, b));
    out_.add(Gate::phase(a, q));
    out_.add(Gate::phase(b, -q));
    out_.add(Gate::cx(a, b));
  }

  Circuit out_;
  int width_;
};

bool is_basic(const Gate& g) {
  switch (g.kind) {
    case GateKind::CX:
      return true;
    case GateKind::Rx:
      return false;
    default:
      return g.controls.empty();
  }
}

}  // namespace

Circuit decompose(const Circuit& circuit) {
  Decomposer d(circuit.width());
  for (const auto& g : circuit.gates()) d.emit(g);
  d.add_phase(circuit.global_phase());
  return d.take();
}

bool is_decomposed(const Circuit& circuit) {
  return std::all_of(circuit.gates().begin(), circuit.gates().end(), is_basic);
}

std::size_t GateHistogram::total() const {
  std::size_t n = 0;
  for (const auto& [kind, count] : by_kind) n += count;
  return n;
}

std::size_t GateHistogram::count(std::string_view kind) const {
  const auto it = by_kind.find(std::string(kind));
  return it == by_kind.end() ? 0 : it->second;
}

GateHistogram gate_count(const Circuit& circuit) {
  GateHistogram h;
  for (const auto& g : circuit.gates()) {
    ++h.by_kind[std::string(kind_name(g.kind))];
    if (!g.controls.empty()) ++h.controlled;
  }
  return h;
}

std::size_t basic_gate_count(const Circuit& circuit) { return gate_count(decompose(circuit)).total(); }

double QuadraticFit::max_relative_residual() const {
  double m = 0.0;
  for (double r : relative_residuals) m = std::max(m, r);
  return m;
}

QuadraticFit fit_quadratic(const std::vector<int>& n, const std::vector<double>& y) {
  if (n.size() != y.size() || n.empty()) throw std::invalid_argument("fit needs matching, non-empty samples");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double n2 = static_cast<double>(n[i]) * n[i];
    num += y[i] * n2;
    den += n2 * n2;
  }
  QuadraticFit fit;
  fit.c = num / den;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double model = fit.c * n[i] * n[i];
    fit.relative_residuals.push_back(std::abs(y[i] - model) / model);
  }
  return fit;
}

}  // namespace ctqw
