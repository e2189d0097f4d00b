#include "interbranch/branches.hpp"

#include <cmath>
#include <stdexcept>

namespace interbranch {

std::vector<Branch>
decompose_by_register(StateVector const& state, std::string_view register_name)
{
  auto const& layout = state.layout();
  auto const& reg = layout.at(register_name);
  auto const values = std::size_t{1} << reg.width;

  std::vector<std::vector<Amplitude>> parts(values);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] == Amplitude{0.0}) {
      continue;
    }
    auto const key = layout.extract(i, reg.name).to_uint();
    auto& part = parts[key];
    if (part.empty()) {
      part.resize(state.size());
    }
    part[i] = state[i];
  }

  std::vector<Branch> result;
  for (std::size_t key = 0; key < values; ++key) {
    auto& part = parts[key];
    if (part.empty()) {
      continue;
    }
    StateVector component(layout, std::move(part));
    double const weight = component.norm();
    if (weight < kBranchDust) {
      continue;
    }

    std::size_t support = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < component.size(); ++i) {
      if (std::abs(component[i]) >= kBranchDust) {
        ++support;
        where = i;
      }
    }

    Branch b{BitString::from_uint(key, reg.width), Amplitude{weight},
             std::nullopt, std::move(component)};
    if (support == 1) {
      b.amplitude = b.component[where];
      std::map<std::string, BitString> local;
      for (auto const& r : layout.registers()) {
        local.emplace(r.name, layout.extract(where, r.name));
      }
      b.local_state = std::move(local);
    }
    result.push_back(std::move(b));
  }
  return result;
}

//---------------------------------------------------------------------------//

TransferVerdict evaluate_transfer(StateVector const& state, Message const& message,
                                  FriendPatterns const& friends)
{
  auto const& layout = state.layout();
  auto const zero = BitString::zeros(message.width());
  TransferVerdict v;
  if (message.blank()) {
    v.annotations.emplace_back("blank message");
  }

  auto fail = [&v](std::string reason) {
    v.success = false;
    v.failure_reason = std::move(reason);
    return v;
  };

  if (layout.at("M").width != message.width() ||
      layout.at("P").width != message.width()) {
    return fail("message width does not match the M and P registers");
  }

  auto const branches = decompose_by_register(state, "R");
  if (branches.size() != 2) {
    return fail("expected two branches on R, found " +
                std::to_string(branches.size()));
  }
  for (auto const& b : branches) {
    if (!b.classical()) {
      return fail("non-classical branch R=" + b.label.str());
    }
  }

  // Sorted by label, and R is one qubit wide.
  auto const& receiver = *branches[0].local_state;
  auto const& sender = *branches[1].local_state;
  v.receiver_paper = receiver.at("P");
  v.receiver_memory = receiver.at("M");
  v.sender_paper = sender.at("P");

  if (v.receiver_paper != message.bits()) {
    return fail("receiver paper holds \"" + v.receiver_paper.str() +
                "\", expected the message \"" + message.str() + "\"");
  }
  if (v.receiver_memory != zero) {
    return fail("cross-branch memory: receiver memory holds \"" +
                v.receiver_memory.str() + "\", expected \"" + zero.str() + "\"");
  }
  if (receiver.at("F") != friends.receiver) {
    return fail("receiver friend is \"" + receiver.at("F").str() +
                "\", expected \"" + friends.receiver.str() + "\"");
  }
  if (receiver.at("Q").str() != "0") {
    return fail("receiver branch has Q=1");
  }
  if (v.sender_paper != zero) {
    return fail("sender paper holds \"" + v.sender_paper.str() +
                "\", expected blank");
  }
  if (sender.at("M") != zero) {
    return fail("sender memory holds \"" + sender.at("M").str() +
                "\", expected \"" + zero.str() + "\"");
  }
  if (sender.at("F") != friends.sender) {
    return fail("sender friend is \"" + sender.at("F").str() + "\", expected \"" +
                friends.sender.str() + "\"");
  }
  if (sender.at("Q").str() != "1") {
    return fail("sender branch has Q=0");
  }

  v.success = true;
  v.failure_reason.reset();
  return v;
}

TransferVerdict verify_transfer(ProtocolRun const& run, Message const& message)
{
  if (!run.config.apply_branch_swap) {
    TransferVerdict v;
    v.failure_reason = "branch swap was not applied";
    if (message.blank()) {
      v.annotations.emplace_back("blank message");
    }
    return v;
  }
  return evaluate_transfer(run.final_state, message,
                           FriendPatterns{BitString("0"), BitString("1")});
}

}  // namespace interbranch
