#include "interbranch/swapsynth.hpp"

#include <stdexcept>

namespace interbranch {

std::string SwapPlan::operator_string() const
{
  if (x_positions.empty()) {
    return "identity";
  }
  std::string s;
  for (auto p : x_positions) {
    if (!s.empty()) {
      s += ' ';
    }
    s += "X_" + std::to_string(p);
  }
  return s;
}

SwapPlan synthesize_swap(FriendSnapshot const& friend0,
                         FriendSnapshot const& friend1)
{
  if (friend0.width() != friend1.width()) {
    throw std::invalid_argument("friend snapshots differ in width: " +
                                std::to_string(friend0.width()) + " vs " +
                                std::to_string(friend1.width()));
  }
  SwapPlan plan;
  for (std::size_t i = 0; i < friend0.width(); ++i) {
    if (friend0.bits[i] != friend1.bits[i]) {
      plan.x_positions.push_back(i + 1);
    }
  }
  return plan;
}

namespace {

std::vector<std::size_t> plan_qubits(RegisterLayout const& layout,
                                     SwapPlan const& plan,
                                     std::string_view register_name)
{
  auto const& reg = layout.at(register_name);
  std::vector<std::size_t> qubits;
  for (auto p : plan.x_positions) {
    if (p < 1 || p > reg.width) {
      throw std::out_of_range("swap position " + std::to_string(p) +
                              " outside register '" + reg.name + "' of width " +
                              std::to_string(reg.width));
    }
    qubits.push_back(reg.offset + p - 1);
  }
  return qubits;
}

}  // namespace

StateVector apply_swap_plan(StateVector const& state, SwapPlan const& plan,
                            std::string_view register_name)
{
  auto const qubits = plan_qubits(state.layout(), plan, register_name);
  if (qubits.empty()) {
    return state;
  }
  return apply_gate(state, GateOp::multi_x(qubits));
}

WideFriendResult wide_friend_protocol_demo(FriendSnapshot const& friend0,
                                           FriendSnapshot const& friend1,
                                           Message const& message)
{
  auto plan = synthesize_swap(friend0, friend1);
  auto const k = friend0.width();
  if (k == 0) {
    throw std::invalid_argument("friend snapshots must be non-empty");
  }
  auto const layout = RegisterLayout::protocol(message.width(), k);
  auto const q = layout.qubit("Q");
  auto const r = layout.qubit("R");
  auto const memory = layout.qubits("M");
  auto const paper = layout.qubits("P");

  std::vector<std::size_t> initial_ones;
  std::size_t record_control = q;
  bool found_control = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (friend0.bits[i]) {
      initial_ones.push_back(layout.qubit("F", i));
    }
    if (!found_control && !friend0.bits[i] && friend1.bits[i]) {
      record_control = layout.qubit("F", i);
      found_control = true;
    }
  }

  Circuit c(layout);
  c.add(GateOp::h(q));
  if (!initial_ones.empty()) {
    c.add(GateOp::multi_x(initial_ones));
  }
  for (auto f : plan_qubits(layout, plan, "F")) {
    c.add(GateOp::cnot(q, f));
  }
  c.add(GateOp::cnot(record_control, r));
  c.add(GateOp::encode({record_control}, memory, message.bits()));
  c.add(GateOp::transversal_cnot(memory, paper));
  c.add(GateOp::transversal_cnot(paper, memory));

  std::vector<std::size_t> swap_block{q, r};
  auto const friend_flips = plan_qubits(layout, plan, "F");
  swap_block.insert(swap_block.end(), friend_flips.begin(), friend_flips.end());
  c.add(GateOp::multi_x(swap_block));

  auto final_state = apply_circuit(StateVector::zero(layout), c).final_state;
  auto verdict = evaluate_transfer(final_state, message,
                                   FriendPatterns{friend0.bits, friend1.bits});
  return {std::move(plan), std::move(c), std::move(final_state),
          std::move(verdict)};
}

}  // namespace interbranch
