#pragma once

#include <string>

#include "ctqw/circuit.hpp"

namespace ctqw {

/// OpenQASM 3 text for an already-decomposed circuit: `OPENQASM 3.0;` header,
/// stdgates include, one `qubit[q] r;` register, one statement per line.
/// Angles are printed with 17 significant digits. Throws std::invalid_argument
/// if any gate is outside the basic set.
std::string export_qasm(const Circuit& circuit);

}  // namespace ctqw
