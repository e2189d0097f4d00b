#pragma once

#include <vector>

#include "json.hpp"

#include "interbranch/branches.hpp"
#include "interbranch/nogo.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/statevec.hpp"
#include "interbranch/swapsynth.hpp"

namespace interbranch {

//!@{
//! JSON writers. Amplitudes are [re, im] pairs in ascending global index
//! order; doubles round-trip exactly.
void to_json(nlohmann::json& j, ProtocolConfig const& v);
void to_json(nlohmann::json& j, RegisterLayout const& v);
void to_json(nlohmann::json& j, StateVector const& v);
void to_json(nlohmann::json& j, Branch const& v);
void to_json(nlohmann::json& j, TransferVerdict const& v);
void to_json(nlohmann::json& j, SwapPlan const& v);
void to_json(nlohmann::json& j, GateOp const& v);
void to_json(nlohmann::json& j, Circuit const& v);
//!@}

//!@{
//! Claim reports: {claim, parameters, measurements, pass}.
void to_json(nlohmann::json& j, DependenceReport const& v);
void to_json(nlohmann::json& j, AmplitudeReport const& v);
//!@}

/// Checkpoint document:
/// {config, message, layout, checkpoints: {label: amplitudes}, final}.
nlohmann::json run_document(ProtocolRun const& run);
/// Inverse of run_document; throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
ProtocolRun parse_run_document(nlohmann::json const& doc);

std::vector<Amplitude> amplitudes_from_json(nlohmann::json const& j);

}  // namespace interbranch
