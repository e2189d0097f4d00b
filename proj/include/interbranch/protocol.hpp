#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interbranch/bitstring.hpp"
#include "interbranch/statevec.hpp"

namespace interbranch {

/// Largest message width accepted by the protocol builder (3 + 2n qubits).
inline constexpr std::size_t kMaxMessageWidth = 10;

/// Snapshot labels in protocol order. "eq7" is the swap operator itself and
/// never appears as a state.
inline constexpr std::array<std::string_view, 7> kCheckpointLabels = {
    "eq1", "eq2", "eq3", "eq4", "eq5", "eq6", "eq8"};

/// Op index of the controlled message encoder, the only column that depends
/// on the message.
inline constexpr std::size_t kEncoderColumn = 3;

struct ProtocolConfig {
  std::size_t n = 1;
  Amplitude amp0{1.0 / 1.4142135623730951, 0.0};
  Amplitude amp1{1.0 / 1.4142135623730951, 0.0};
  bool uncompute_memory = true;
  bool apply_branch_swap = true;

  /// Throws std::invalid_argument unless n is in [1, kMaxMessageWidth] and
  /// the amplitudes are real, non-negative and normalized within kExactTol.
  void validate() const;

  /// True when both amplitudes are 1/sqrt(2) and a Hadamard prepares Q.
  bool equal_superposition() const;
  /// Y-rotation angle taking |0> to amp0|0> + amp1|1>.
  double preparation_angle() const;

  RegisterLayout layout() const { return RegisterLayout::protocol(n); }
};

/*!
 * Builds the message-transfer circuit on layout Q, R, F, M(n), P(n).
 *
 * Columns: Q preparation; CNOT Q->F; CNOT F->R; message encoder controlled
 * on F; transversal CNOT M->P; transversal CNOT P->M (when uncomputing);
 * X on Q, R, F (when swapping). Snapshots eq1..eq6, eq8 follow the columns.
 */
Circuit build_protocol_circuit(ProtocolConfig const& config,
                               Message const& message);

struct ProtocolRun {
  ProtocolConfig config;
  Message message{"0"};
  std::vector<std::pair<std::string, StateVector>> checkpoints;
  StateVector final_state;

  bool has_checkpoint(std::string_view label) const;
  /// Throws std::out_of_range when absent.
  StateVector const& checkpoint(std::string_view label) const;
};

/// Evolves the all-zero state through build_protocol_circuit.
ProtocolRun run_protocol(ProtocolConfig const& config, Message const& message);

/// Closed-form two-term state for a checkpoint label, built directly from
/// basis indices without running any gates.
StateVector checkpoint_reference_state(std::string_view label,
                                       ProtocolConfig const& config,
                                       Message const& message);

}  // namespace interbranch
