#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "interbranch/statevec.hpp"

namespace interbranch {

/// A gate from the export gate set: x, h, cx, and ry for unequal branch
/// preparation.
struct ElementaryGate {
  std::string name;
  std::vector<std::size_t> qubits;  // control first for cx
  double angle = 0.0;

  friend bool operator==(ElementaryGate const&, ElementaryGate const&) = default;
};

/// Lowers every circuit column to elementary gates. An empty encoder payload
/// lowers to nothing. Throws std::invalid_argument for an encoder with more
/// than one control.
std::vector<ElementaryGate> lower_to_elementary(Circuit const& circuit);

struct CircuitStats {
  std::size_t columns = 0;  // GateOps
  std::size_t gates = 0;    // elementary gates
  std::size_t depth = 0;    // ASAP layers of elementary gates
};

CircuitStats circuit_stats(Circuit const& circuit);

struct QasmOptions {
  bool measure = false;  // append one creg and measurement per register
};

/// OpenQASM 2.0 text over a single `qreg q[N]`, with a comment mapping layout
/// registers to qubit ranges.
std::string export_qasm(Circuit const& circuit, QasmOptions const& options = {});

/// Parses text written by export_qasm (x, h, cx, ry; measurements and
/// classical registers are skipped) into a circuit over `layout`. Throws
/// std::invalid_argument on anything else or a qreg size mismatch.
Circuit import_qasm(std::string_view text, RegisterLayout const& layout);

}  // namespace interbranch
