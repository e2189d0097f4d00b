#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interbranch/bitstring.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/statevec.hpp"

namespace interbranch {

/// Components with norm below this are dropped from a decomposition.
inline constexpr double kBranchDust = 1e-12;

/*!
 * One component of a state, selected by the value of a record register.
 *
 * `component` is the unnormalized projection, so the components of a full
 * decomposition sum back to the input. When the projection is a single basis
 * vector, `amplitude` is its coefficient and `local_state` holds every
 * register's value; otherwise `amplitude` is the (real) projection norm and
 * `local_state` is empty.
 */
struct Branch {
  BitString label;
  Amplitude amplitude;
  std::optional<std::map<std::string, BitString>> local_state;
  StateVector component;

  bool classical() const { return local_state.has_value(); }
};

/// Branches ordered by label; throws std::invalid_argument for an unknown
/// register.
std::vector<Branch>
decompose_by_register(StateVector const& state, std::string_view register_name);

struct TransferVerdict {
  bool success = false;
  BitString receiver_paper;
  BitString receiver_memory;
  BitString sender_paper;
  std::optional<std::string> failure_reason;
  std::vector<std::string> annotations;
};

/// Expected friend register contents in each room after the swap.
struct FriendPatterns {
  BitString receiver;  // R=0 room
  BitString sender;    // R=1 room
};

/*!
 * Success predicate for a completed transfer.
 *
 * Clauses, in the order they are checked: exactly two branches on R; both
 * branches classical; R=0 has P = message, M = 0, F = receiver pattern,
 * Q = 0; R=1 has P = 0, M = 0. The first failed clause names the failure.
 */
TransferVerdict evaluate_transfer(StateVector const& state, Message const& message,
                                  FriendPatterns const& friends);

/// evaluate_transfer on a protocol run, with the single-qubit friend in
/// |0> for the receiver. A run without the branch swap fails.
TransferVerdict verify_transfer(ProtocolRun const& run, Message const& message);

}  // namespace interbranch
