#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "interbranch/bitstring.hpp"

namespace interbranch {

using Amplitude = std::complex<double>;

/// Tolerance for exact-algebra checks (permutation and Hadamard level gates).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for comparisons against dense matrix-chain products.
inline constexpr double kOracleTol = 1e-10;
/// Largest register count for which dense operator matrices are built.
inline constexpr std::size_t kMaxDenseQubits = 12;
/// Largest register count for which state vectors are allocated.
inline constexpr std::size_t kMaxStateQubits = 26;

struct Register {
  std::string name;
  std::size_t width = 0;
  std::size_t offset = 0;  // global qubit index of the register's first bit
};

//---------------------------------------------------------------------------//
/*!
 * Ordered set of named qubit registers.
 *
 * Qubits are numbered left to right: the first bit of the first register is
 * qubit 0. Qubit q corresponds to bit (total_qubits - 1 - q) of the global
 * basis index, so a basis index printed in binary reads like a ket with the
 * registers concatenated in layout order.
 */
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(
      std::vector<std::pair<std::string, std::size_t>> const& registers);

  /// Q(1), R(1), F(friend_width), M(n), P(n).
  static RegisterLayout protocol(std::size_t message_width,
                                 std::size_t friend_width = 1);

  std::vector<Register> const& registers() const { return registers_; }
  std::size_t total_qubits() const { return total_; }
  std::size_t dimension() const { return std::size_t{1} << total_; }

  bool contains(std::string_view name) const;
  Register const& at(std::string_view name) const;

  /// Global qubit index of bit `bit` (0 = leftmost) of register `name`.
  std::size_t qubit(std::string_view name, std::size_t bit = 0) const;
  /// All global qubit indices of a register, left to right.
  std::vector<std::size_t> qubits(std::string_view name) const;

  /// Bitmask of qubit q within a global basis index.
  std::size_t mask(std::size_t q) const { return std::size_t{1} << (total_ - 1 - q); }

  BitString extract(std::size_t index, std::string_view name) const;
  std::size_t index_of(std::map<std::string, BitString> const& assignment) const;

  friend bool operator==(RegisterLayout const& a, RegisterLayout const& b)
  {
    return a.registers_.size() == b.registers_.size() &&
           std::equal(a.registers_.begin(), a.registers_.end(),
                      b.registers_.begin(), [](auto const& x, auto const& y) {
                        return x.name == y.name && x.width == y.width;
                      });
  }

 private:
  std::vector<Register> registers_;
  std::size_t total_ = 0;
};

//---------------------------------------------------------------------------//
class StateVector {
 public:
  StateVector() = default;
  /// Throws if the amplitude count is not the layout dimension.
  StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes);

  /// The all-zero basis state.
  static StateVector zero(RegisterLayout layout);

  RegisterLayout const& layout() const { return layout_; }
  std::span<Amplitude const> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  std::size_t size() const { return amps_.size(); }

  double norm() const;

  friend bool operator==(StateVector const&, StateVector const&) = default;

 private:
  RegisterLayout layout_;
  std::vector<Amplitude> amps_;
};

/// Throws std::invalid_argument for unknown or unassigned registers and
/// width mismatches.
StateVector make_basis_state(RegisterLayout const& layout,
                             std::map<std::string, BitString> const& assignment);

//---------------------------------------------------------------------------//
enum class GateKind {
  X,
  H,
  RY,  // single-qubit Y rotation, used for unequal branch preparation
  CNOT,
  MULTI_X,
  ENCODE_MU,
  TRANSVERSAL_CNOT,
};

std::string_view to_string(GateKind kind);

/*!
 * One column of a circuit.
 *
 * - X, H, RY: one target, no controls.
 * - CNOT: one control, one target.
 * - MULTI_X: X on every target, no controls.
 * - ENCODE_MU: X on each target whose payload bit is 1, applied only when
 *   every control is 1 (an empty control list is unconditional).
 * - TRANSVERSAL_CNOT: controls[i] drives targets[i].
 */
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> controls;
  std::optional<BitString> payload;
  double angle = 0.0;

  static GateOp x(std::size_t target);
  static GateOp h(std::size_t target);
  static GateOp ry(std::size_t target, double angle);
  static GateOp cnot(std::size_t control, std::size_t target);
  static GateOp multi_x(std::vector<std::size_t> targets);
  static GateOp encode(std::vector<std::size_t> controls,
                       std::vector<std::size_t> targets, BitString payload);
  static GateOp transversal_cnot(std::vector<std::size_t> controls,
                                 std::vector<std::size_t> targets);

  /// Throws std::invalid_argument when the op is malformed for `layout`.
  void validate(RegisterLayout const& layout) const;

  friend bool operator==(GateOp const&, GateOp const&) = default;
};

struct Checkpoint {
  std::size_t after_ops = 0;  // snapshot taken once this many ops have run
  std::string label;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

  /// Validates and appends.
  Circuit& add(GateOp op);
  /// Marks a snapshot of the state after all ops added so far.
  Circuit& mark(std::string label);

  RegisterLayout const& layout() const { return layout_; }
  std::vector<GateOp> const& ops() const { return ops_; }
  std::vector<Checkpoint> const& checkpoints() const { return checkpoints_; }

  /// Ops reversed; every kind except RY is self-inverse, RY is negated.
  Circuit inverse() const;

 private:
  RegisterLayout layout_;
  std::vector<GateOp> ops_;
  std::vector<Checkpoint> checkpoints_;
};

struct CircuitResult {
  StateVector final_state;
  std::map<std::string, StateVector> snapshots;
};

StateVector apply_gate(StateVector const& state, GateOp const& op);
CircuitResult apply_circuit(StateVector const& state, Circuit const& circuit);

/// Inner product <a|b>. Throws on layout mismatch.
Amplitude inner_product(StateVector const& a, StateVector const& b);
/// |<a|b>|^2.
double fidelity(StateVector const& a, StateVector const& b);
/// max_i |a_i - b_i|.
double max_abs_diff(StateVector const& a, StateVector const& b);

/// Full-space matrix of `op`; throws std::length_error above kMaxDenseQubits.
Eigen::MatrixXcd gate_matrix(GateOp const& op, RegisterLayout const& layout);

}  // namespace interbranch
