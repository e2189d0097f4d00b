#include "interbranch/serialize.hpp"

#include <stdexcept>

namespace interbranch {

namespace {

nlohmann::json amplitude_json(Amplitude a)
{
  return nlohmann::json::array({a.real(), a.imag()});
}

Amplitude amplitude_from(nlohmann::json const& j)
{
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("amplitude must be a [re, im] pair");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

RegisterLayout layout_from(nlohmann::json const& j)
{
  std::vector<std::pair<std::string, std::size_t>> regs;
  for (auto const& r : j) {
    regs.emplace_back(r.at("name").get<std::string>(),
                      r.at("width").get<std::size_t>());
  }
  return RegisterLayout(regs);
}

}  // namespace

//---------------------------------------------------------------------------//

void to_json(nlohmann::json& j, ProtocolConfig const& v)
{
  j = nlohmann::json{
      {"n", v.n},
      {"amp0", amplitude_json(v.amp0)},
      {"amp1", amplitude_json(v.amp1)},
      {"uncompute_memory", v.uncompute_memory},
      {"apply_branch_swap", v.apply_branch_swap},
  };
}

void to_json(nlohmann::json& j, RegisterLayout const& v)
{
  j = nlohmann::json::array();
  for (auto const& r : v.registers()) {
    j.push_back({{"name", r.name}, {"width", r.width}});
  }
}

void to_json(nlohmann::json& j, StateVector const& v)
{
  j = nlohmann::json::array();
  for (auto a : v.amplitudes()) {
    j.push_back(amplitude_json(a));
  }
}

void to_json(nlohmann::json& j, Branch const& v)
{
  j = nlohmann::json{{"label", v.label.str()},
                     {"amplitude", amplitude_json(v.amplitude)}};
  if (v.local_state) {
    nlohmann::json regs = nlohmann::json::object();
    for (auto const& [name, bits] : *v.local_state) {
      regs[name] = bits.str();
    }
    j["registers"] = std::move(regs);
  } else {
    j["registers"] = nullptr;
  }
}

void to_json(nlohmann::json& j, TransferVerdict const& v)
{
  j = nlohmann::json{
      {"success", v.success},
      {"receiver_paper", v.receiver_paper.str()},
      {"receiver_memory", v.receiver_memory.str()},
      {"sender_paper", v.sender_paper.str()},
      {"annotations", v.annotations},
  };
  if (v.failure_reason) {
    j["failure_reason"] = *v.failure_reason;
  }
}

void to_json(nlohmann::json& j, SwapPlan const& v)
{
  j = nlohmann::json{{"positions", v.x_positions}, {"cost", v.hamming_cost()}};
}

void to_json(nlohmann::json& j, GateOp const& v)
{
  j = nlohmann::json{{"kind", std::string(to_string(v.kind))},
                     {"targets", v.targets},
                     {"controls", v.controls}};
  if (v.payload) {
    j["payload"] = v.payload->str();
  }
  if (v.kind == GateKind::RY) {
    j["angle"] = v.angle;
  }
}

void to_json(nlohmann::json& j, Circuit const& v)
{
  nlohmann::json checkpoints = nlohmann::json::array();
  for (auto const& cp : v.checkpoints()) {
    checkpoints.push_back({{"after_ops", cp.after_ops}, {"label", cp.label}});
  }
  j = nlohmann::json{
      {"layout", v.layout()}, {"ops", v.ops()}, {"checkpoints", checkpoints}};
}

void to_json(nlohmann::json& j, DependenceReport const& v)
{
  nlohmann::json pairs = nlohmann::json::array();
  for (auto const& p : v.pairs) {
    pairs.push_back(
        {{"mu1", p.first.str()}, {"mu2", p.second.str()}, {"distance", p.distance}});
  }
  j = nlohmann::json{
      {"claim", "no message-independent memory-preserving branch swap"},
      {"parameters", {{"n", v.n}}},
      {"measurements",
       {{"nonblank_messages", v.nonblank_messages},
        {"pairs", pairs},
        {"max_unitarity_error", v.max_unitarity_error},
        {"max_involution_error", v.max_involution_error},
        {"max_mapping_error", v.max_mapping_error},
        {"max_distance_error", v.max_distance_error},
        {"non_constant", v.non_constant},
        {"note", v.note}}},
      {"pass", v.pass},
  };
}

void to_json(nlohmann::json& j, AmplitudeReport const& v)
{
  j = nlohmann::json{
      {"claim", "message-branch amplitude is unchanged by the branch swap"},
      {"parameters",
       {{"amp0", amplitude_json(v.amp0)},
        {"amp1", amplitude_json(v.amp1)},
        {"message", v.message.str()}}},
      {"measurements",
       {{"pre_swap_fidelity", v.pre_swap_fidelity},
        {"message_weight_before", v.message_weight_before},
        {"message_weight_after", v.message_weight_after},
        {"r0_before", v.r0_before},
        {"r1_before", v.r1_before},
        {"r0_after", v.r0_after},
        {"r1_after", v.r1_after},
        {"message_weight_unchanged", v.message_weight_unchanged},
        {"branches_exchanged", v.branches_exchanged}}},
      {"pass", v.pass},
  };
}

//---------------------------------------------------------------------------//

std::vector<Amplitude> amplitudes_from_json(nlohmann::json const& j)
{
  if (!j.is_array()) {
    throw std::invalid_argument("amplitude list must be an array");
  }
  std::vector<Amplitude> amps;
  amps.reserve(j.size());
  for (auto const& a : j) {
    amps.push_back(amplitude_from(a));
  }
  return amps;
}

nlohmann::json run_document(ProtocolRun const& run)
{
  nlohmann::json checkpoints = nlohmann::json::object();
  for (auto const& [label, state] : run.checkpoints) {
    checkpoints[label] = state;
  }
  return nlohmann::json{
      {"config", run.config},
      {"message", run.message.str()},
      {"layout", run.final_state.layout()},
      {"checkpoints", checkpoints},
      {"final", run.final_state},
  };
}

ProtocolRun parse_run_document(nlohmann::json const& doc)
{
  auto const& c = doc.at("config");
  ProtocolConfig config;
  config.n = c.at("n").get<std::size_t>();
  config.amp0 = amplitude_from(c.at("amp0"));
  config.amp1 = amplitude_from(c.at("amp1"));
  config.uncompute_memory = c.at("uncompute_memory").get<bool>();
  config.apply_branch_swap = c.at("apply_branch_swap").get<bool>();

  auto const layout = layout_from(doc.at("layout"));
  ProtocolRun run{config, Message(doc.at("message").get<std::string>()), {},
                  StateVector(layout, amplitudes_from_json(doc.at("final")))};

  auto const& cps = doc.at("checkpoints");
  for (auto label : kCheckpointLabels) {
    auto const key = std::string(label);
    if (cps.contains(key)) {
      run.checkpoints.emplace_back(
          key, StateVector(layout, amplitudes_from_json(cps.at(key))));
    }
  }
  return run;
}

}  // namespace interbranch
