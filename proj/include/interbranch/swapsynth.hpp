#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "interbranch/bitstring.hpp"
#include "interbranch/branches.hpp"
#include "interbranch/statevec.hpp"

namespace interbranch {

/// A friend's configuration in one branch.
struct FriendSnapshot {
  BitString bits;

  explicit FriendSnapshot(BitString b) : bits(std::move(b)) {}
  explicit FriendSnapshot(std::string_view b) : bits(b) {}
  std::size_t width() const { return bits.width(); }
};

/// X gates that map one friend snapshot onto the other. Positions are
/// 1-based from the left, so "0101110101" vs "1101100100" is X_1 X_6 X_10.
struct SwapPlan {
  std::vector<std::size_t> x_positions;

  std::size_t hamming_cost() const { return x_positions.size(); }
  /// "X_1 X_6 X_10", or "identity" for an empty plan.
  std::string operator_string() const;

  friend bool operator==(SwapPlan const&, SwapPlan const&) = default;
};

/// Throws std::invalid_argument on a width mismatch.
SwapPlan synthesize_swap(FriendSnapshot const& friend0,
                         FriendSnapshot const& friend1);

/// X on the plan's positions within `register_name`.
StateVector apply_swap_plan(StateVector const& state, SwapPlan const& plan,
                            std::string_view register_name);

struct WideFriendResult {
  SwapPlan plan;
  Circuit circuit;
  StateVector final_state;
  TransferVerdict verdict;
};

/*!
 * Message transfer with a k-qubit friend.
 *
 * F is first set to friend0, then the differing bits are flipped under
 * control of Q so the Q=1 branch holds friend1. The record R and the
 * message encoder are controlled on the first qubit where friend0 is 0 and
 * friend1 is 1; when no such qubit exists they are controlled on Q. The
 * swap block is X_Q X_R plus the synthesized plan on F. For k = 1 with
 * friends "0" and "1" this is exactly the single-qubit protocol.
 */
WideFriendResult wide_friend_protocol_demo(FriendSnapshot const& friend0,
                                           FriendSnapshot const& friend1,
                                           Message const& message);

}  // namespace interbranch
