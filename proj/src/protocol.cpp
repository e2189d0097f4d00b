#include "interbranch/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace interbranch {

namespace {

void check_width(ProtocolConfig const& config, Message const& message)
{
  if (message.width() != config.n) {
    throw std::invalid_argument("message \"" + message.str() + "\" has width " +
                                std::to_string(message.width()) +
                                " but the protocol expects n = " +
                                std::to_string(config.n));
  }
}

// Per-register contents of one basis term on the protocol layout.
struct Term {
  char q, r, f;
  BitString m, p;
};

std::size_t term_index(RegisterLayout const& layout, Term const& t)
{
  return layout.index_of({{"Q", BitString(std::string(1, t.q))},
                          {"R", BitString(std::string(1, t.r))},
                          {"F", BitString(std::string(1, t.f))},
                          {"M", t.m},
                          {"P", t.p}});
}

}  // namespace

//---------------------------------------------------------------------------//

void ProtocolConfig::validate() const
{
  if (n < 1 || n > kMaxMessageWidth) {
    throw std::invalid_argument("message width n must be in [1, " +
                                std::to_string(kMaxMessageWidth) + "], got " +
                                std::to_string(n));
  }
  for (auto a : {amp0, amp1}) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("branch amplitude is not finite");
    }
    if (a.imag() != 0.0 || a.real() < 0.0) {
      throw std::invalid_argument(
          "branch amplitudes must be real and non-negative");
    }
  }
  double const total = std::norm(amp0) + std::norm(amp1);
  if (std::abs(total - 1.0) > kExactTol) {
    throw std::invalid_argument("branch amplitudes are not normalized: "
                                "|amp0|^2 + |amp1|^2 = " +
                                std::to_string(total));
  }
}

bool ProtocolConfig::equal_superposition() const
{
  double const s = 1.0 / std::sqrt(2.0);
  return std::abs(amp0 - s) <= kExactTol && std::abs(amp1 - s) <= kExactTol;
}

double ProtocolConfig::preparation_angle() const
{
  return 2.0 * std::atan2(std::abs(amp1), std::abs(amp0));
}

//---------------------------------------------------------------------------//

Circuit build_protocol_circuit(ProtocolConfig const& config,
                               Message const& message)
{
  config.validate();
  check_width(config, message);

  auto const layout = config.layout();
  auto const q = layout.qubit("Q");
  auto const r = layout.qubit("R");
  auto const f = layout.qubit("F");
  auto const memory = layout.qubits("M");
  auto const paper = layout.qubits("P");

  Circuit c(layout);
  if (config.equal_superposition()) {
    c.add(GateOp::h(q));
  } else {
    c.add(GateOp::ry(q, config.preparation_angle()));
  }
  c.mark("eq1");
  c.add(GateOp::cnot(q, f)).mark("eq2");
  c.add(GateOp::cnot(f, r)).mark("eq3");
  c.add(GateOp::encode({f}, memory, message.bits())).mark("eq4");
  c.add(GateOp::transversal_cnot(memory, paper)).mark("eq5");
  if (config.uncompute_memory) {
    c.add(GateOp::transversal_cnot(paper, memory)).mark("eq6");
  }
  if (config.apply_branch_swap) {
    c.add(GateOp::multi_x({q, r, f})).mark("eq8");
  }
  return c;
}

//---------------------------------------------------------------------------//

bool ProtocolRun::has_checkpoint(std::string_view label) const
{
  return std::any_of(checkpoints.begin(), checkpoints.end(),
                     [&](auto const& kv) { return kv.first == label; });
}

StateVector const& ProtocolRun::checkpoint(std::string_view label) const
{
  for (auto const& [name, state] : checkpoints) {
    if (name == label) {
      return state;
    }
  }
  throw std::out_of_range("run has no checkpoint '" + std::string(label) + "'");
}

ProtocolRun run_protocol(ProtocolConfig const& config, Message const& message)
{
  auto const circuit = build_protocol_circuit(config, message);
  auto result = apply_circuit(StateVector::zero(circuit.layout()), circuit);

  ProtocolRun run{config, message, {}, std::move(result.final_state)};
  for (auto label : kCheckpointLabels) {
    auto it = result.snapshots.find(std::string(label));
    if (it != result.snapshots.end()) {
      run.checkpoints.emplace_back(it->first, std::move(it->second));
    }
  }
  return run;
}

//---------------------------------------------------------------------------//

StateVector checkpoint_reference_state(std::string_view label,
                                       ProtocolConfig const& config,
                                       Message const& message)
{
  config.validate();
  check_width(config, message);

  auto const& mu = message.bits();
  auto const zero = BitString::zeros(config.n);

  // amp0 multiplies the Q=0 term, amp1 the Q=1 term (before any swap).
  Term t0{'0', '0', '0', zero, zero};
  Term t1{'1', '0', '0', zero, zero};
  if (label == "eq1") {
  } else if (label == "eq2") {
    t1 = {'1', '0', '1', zero, zero};
  } else if (label == "eq3") {
    t1 = {'1', '1', '1', zero, zero};
  } else if (label == "eq4") {
    t1 = {'1', '1', '1', mu, zero};
  } else if (label == "eq5") {
    t1 = {'1', '1', '1', mu, mu};
  } else if (label == "eq6") {
    if (!config.uncompute_memory) {
      throw std::invalid_argument("eq6 does not exist without memory uncomputation");
    }
    t1 = {'1', '1', '1', zero, mu};
  } else if (label == "eq8") {
    t0 = {'1', '1', '1', zero, zero};
    t1 = {'0', '0', '0', config.uncompute_memory ? zero : mu, mu};
  } else {
    throw std::invalid_argument("unknown checkpoint label '" + std::string(label) +
                                "'");
  }

  auto const layout = config.layout();
  std::vector<Amplitude> amps(layout.dimension());
  amps[term_index(layout, t0)] += config.amp0;
  amps[term_index(layout, t1)] += config.amp1;
  return StateVector(layout, std::move(amps));
}

}  // namespace interbranch
