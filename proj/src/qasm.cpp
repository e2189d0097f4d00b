#include "interbranch/qasm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace interbranch {

std::vector<ElementaryGate> lower_to_elementary(Circuit const& circuit)
{
  std::vector<ElementaryGate> gates;
  for (auto const& op : circuit.ops()) {
    switch (op.kind) {
      case GateKind::X:
      case GateKind::MULTI_X:
        for (auto t : op.targets) {
          gates.push_back({"x", {t}});
        }
        break;
      case GateKind::H:
        gates.push_back({"h", {op.targets[0]}});
        break;
      case GateKind::RY:
        gates.push_back({"ry", {op.targets[0]}, op.angle});
        break;
      case GateKind::CNOT:
        gates.push_back({"cx", {op.controls[0], op.targets[0]}});
        break;
      case GateKind::ENCODE_MU:
        if (op.controls.size() > 1) {
          throw std::invalid_argument(
              "encoder with several controls has no x/h/cx lowering");
        }
        for (std::size_t b = 0; b < op.targets.size(); ++b) {
          if (!(*op.payload)[b]) {
            continue;
          }
          if (op.controls.empty()) {
            gates.push_back({"x", {op.targets[b]}});
          } else {
            gates.push_back({"cx", {op.controls[0], op.targets[b]}});
          }
        }
        break;
      case GateKind::TRANSVERSAL_CNOT:
        for (std::size_t k = 0; k < op.targets.size(); ++k) {
          gates.push_back({"cx", {op.controls[k], op.targets[k]}});
        }
        break;
    }
  }
  return gates;
}

CircuitStats circuit_stats(Circuit const& circuit)
{
  auto const gates = lower_to_elementary(circuit);
  std::vector<std::size_t> busy_until(circuit.layout().total_qubits(), 0);
  std::size_t depth = 0;
  for (auto const& g : gates) {
    std::size_t layer = 0;
    for (auto q : g.qubits) {
      layer = std::max(layer, busy_until[q]);
    }
    for (auto q : g.qubits) {
      busy_until[q] = layer + 1;
    }
    depth = std::max(depth, layer + 1);
  }
  return {circuit.ops().size(), gates.size(), depth};
}

//---------------------------------------------------------------------------//

std::string export_qasm(Circuit const& circuit, QasmOptions const& options)
{
  auto const& layout = circuit.layout();
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "// registers:";
  for (auto const& r : layout.registers()) {
    os << ' ' << r.name << "=q[" << r.offset;
    if (r.width > 1) {
      os << ".." << r.offset + r.width - 1;
    }
    os << ']';
  }
  os << "\n";
  os << "qreg q[" << layout.total_qubits() << "];\n";
  if (options.measure) {
    for (auto const& r : layout.registers()) {
      os << "creg c_" << r.name << '[' << r.width << "];\n";
    }
  }

  for (auto const& g : lower_to_elementary(circuit)) {
    os << g.name;
    if (g.name == "ry") {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
      os << '(' << buf << ')';
    }
    os << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      os << (i ? "," : "") << "q[" << g.qubits[i] << ']';
    }
    os << ";\n";
  }

  if (options.measure) {
    for (auto const& r : layout.registers()) {
      for (std::size_t b = 0; b < r.width; ++b) {
        os << "measure q[" << r.offset + b << "] -> c_" << r.name << '[' << b
           << "];\n";
      }
    }
  }
  return os.str();
}

//---------------------------------------------------------------------------//

namespace {

std::size_t parse_index(std::string const& s)
{
  std::size_t v = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad qubit index '" + s + "'");
  }
  return v;
}

std::string trim(std::string const& s)
{
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Circuit import_qasm(std::string_view text, RegisterLayout const& layout)
{
  static std::regex const qreg_re(R"(qreg\s+q\s*\[\s*(\d+)\s*\]\s*;)");
  static std::regex const gate_re(
      R"(([a-z]+)\s*(?:\(\s*([^)]*)\s*\))?\s+q\s*\[\s*(\d+)\s*\]\s*(?:,\s*q\s*\[\s*(\d+)\s*\]\s*)?;)");

  Circuit circuit(layout);
  bool have_qreg = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw.substr(0, raw.find("//")));
    if (line.empty() || line.starts_with("OPENQASM") ||
        line.starts_with("include") || line.starts_with("creg") ||
        line.starts_with("measure") || line.starts_with("barrier")) {
      continue;
    }
    auto fail = [&](std::string const& why) {
      throw std::invalid_argument("qasm line " + std::to_string(lineno) + ": " +
                                  why + ": " + line);
    };

    std::smatch m;
    if (std::regex_match(line, m, qreg_re)) {
      if (have_qreg) {
        fail("only one qreg is supported");
      }
      if (parse_index(m[1]) != layout.total_qubits()) {
        fail("qreg size does not match the layout");
      }
      have_qreg = true;
      continue;
    }
    if (!std::regex_match(line, m, gate_re)) {
      fail("unsupported statement");
    }
    if (!have_qreg) {
      fail("gate before qreg declaration");
    }
    auto const name = m[1].str();
    auto const a = parse_index(m[3]);
    bool const two = m[4].matched;
    if (name == "x" && !two && !m[2].matched) {
      circuit.add(GateOp::x(a));
    } else if (name == "h" && !two && !m[2].matched) {
      circuit.add(GateOp::h(a));
    } else if (name == "cx" && two && !m[2].matched) {
      circuit.add(GateOp::cnot(a, parse_index(m[4])));
    } else if (name == "ry" && !two && m[2].matched) {
      std::size_t used = 0;
      double angle = 0;
      try {
        angle = std::stod(m[2].str(), &used);
      } catch (std::exception const&) {
        fail("bad angle");
      }
      if (used != static_cast<std::size_t>(m[2].length())) {
        fail("bad angle");
      }
      circuit.add(GateOp::ry(a, angle));
    } else {
      fail("unsupported gate");
    }
  }
  if (!have_qreg) {
    throw std::invalid_argument("qasm text declares no qreg");
  }
  return circuit;
}

}  // namespace interbranch
