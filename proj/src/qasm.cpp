#include "ctqw/qasm.hpp"

#include <cstdio>
#include <stdexcept>

#include "ctqw/synthesis.hpp"

namespace ctqw {

namespace {

std::string angle_text(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string qubit(int q) { return "r[" + std::to_string(q) + "]"; }

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  if (!is_decomposed(circuit)) {
    throw std::invalid_argument("export_qasm needs a decomposed circuit (multi-controlled or rx gate present)");
  }
  std::string out;
  out += "OPENQASM 3.0;\n";
  out += "include \"stdgates.inc\";\n";
  out += "qubit[" + std::to_string(circuit.width()) + "] r;\n";
  for (const auto& g : circuit.gates()) {
    const std::string name(kind_name(g.kind));
    switch (g.kind) {
      case GateKind::CX:
        out += "cx " + qubit(g.controls.front().qubit) + ", " + qubit(g.target) + ";\n";
        break;
      case GateKind::GlobalPhase:
        out += "gphase(" + angle_text(g.angle) + ");\n";
        break;
      case GateKind::H:
      case GateKind::X:
        out += name + " " + qubit(g.target) + ";\n";
        break;
      default:
        out += name + "(" + angle_text(g.angle) + ") " + qubit(g.target) + ";\n";
        break;
    }
  }
  if (circuit.global_phase() != 0.0) {
    out += "gphase(" + angle_text(circuit.global_phase()) + ");\n";
  }
  return out;
}

}  // namespace ctqw
