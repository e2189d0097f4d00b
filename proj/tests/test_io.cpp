#include <cmath>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/qasm.hpp"
#include "interbranch/serialize.hpp"

using namespace interbranch;

namespace {

std::map<std::string, int> count_gate_lines(std::string const& qasm)
{
  std::map<std::string, int> counts;
  std::istringstream is(qasm);
  std::string line;
  std::regex const gate(R"(^(x|h|cx|ry)[ (])");
  std::smatch m;
  while (std::getline(is, line)) {
    if (std::regex_search(line, m, gate)) {
      ++counts[m[1]];
    }
  }
  return counts;
}

Circuit protocol_circuit(std::size_t n, char const* mu, double amp0 = 1 / std::sqrt(2.0))
{
  ProtocolConfig config;
  config.n = n;
  config.amp0 = amp0;
  config.amp1 = std::sqrt(1 - amp0 * amp0);
  return build_protocol_circuit(config, Message(mu));
}

}  // namespace

//---------------------------------------------------------------------------//
// QASM

TEST(Qasm, single_bit_gate_counts)
{
  auto const text = export_qasm(protocol_circuit(1, "1"));
  EXPECT_TRUE(text.starts_with("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"));
  EXPECT_NE(text.find("qreg q[5];"), std::string::npos);
  auto const counts = count_gate_lines(text);
  EXPECT_EQ(counts.at("h"), 1);
  EXPECT_EQ(counts.at("cx"), 5);
  EXPECT_EQ(counts.at("x"), 3);
  EXPECT_EQ(counts.count("ry"), 0u);
}

TEST(Qasm, blank_message_drops_encoder)
{
  auto const counts = count_gate_lines(export_qasm(protocol_circuit(1, "0")));
  EXPECT_EQ(counts.at("cx"), 4);
}

TEST(Qasm, encoder_emits_one_cx_per_set_bit)
{
  auto const gates = lower_to_elementary(protocol_circuit(3, "101"));
  auto const cx = std::count_if(gates.begin(), gates.end(),
                                [](auto const& g) { return g.name == "cx"; });
  // Q->F, F->R, 2 encoder, 3 M->P, 3 P->M.
  EXPECT_EQ(cx, 10);
  auto const layout = RegisterLayout::protocol(3);
  auto const f = layout.qubit("F");
  EXPECT_EQ(gates[3], (ElementaryGate{"cx", {f, layout.qubit("M", 0)}, 0.0}));
  EXPECT_EQ(gates[4], (ElementaryGate{"cx", {f, layout.qubit("M", 2)}, 0.0}));
}

TEST(Qasm, unequal_amplitudes_use_ry)
{
  auto const counts = count_gate_lines(export_qasm(protocol_circuit(1, "1", 0.6)));
  EXPECT_EQ(counts.at("ry"), 1);
  EXPECT_EQ(counts.count("h"), 0u);
}

TEST(Qasm, measurements)
{
  auto const text = export_qasm(protocol_circuit(2, "10"), QasmOptions{true});
  for (auto const* reg : {"creg c_Q[1];", "creg c_R[1];", "creg c_F[1];",
                          "creg c_M[2];", "creg c_P[2];", "measure q[6] -> c_P[1];"}) {
    EXPECT_NE(text.find(reg), std::string::npos) << reg;
  }
}

TEST(Qasm, reimport_resimulates_identically)
{
  std::vector<Circuit> circuits;
  circuits.push_back(protocol_circuit(1, "1"));
  circuits.push_back(protocol_circuit(3, "101"));
  circuits.push_back(protocol_circuit(2, "11", 0.3));
  for (auto const& c : circuits) {
    for (bool measure : {false, true}) {
      auto const back = import_qasm(export_qasm(c, QasmOptions{measure}), c.layout());
      auto const zero = StateVector::zero(c.layout());
      EXPECT_LE(max_abs_diff(apply_circuit(zero, back).final_state,
                             apply_circuit(zero, c).final_state),
                kExactTol);
    }
  }
}

TEST(Qasm, reimport_random_circuits)
{
  std::mt19937_64 rng(71);
  auto const layout = RegisterLayout({{"A", 2}, {"B", 2}});
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(layout);
    for (int k = 0; k < 8; ++k) {
      auto op = gen::random_op(layout.total_qubits(), rng);
      // Multi-controlled encoders are outside the export gate set.
      if (op.kind == GateKind::ENCODE_MU && op.controls.size() > 1) {
        continue;
      }
      c.add(std::move(op));
    }
    auto const s = gen::random_state(layout, rng);
    auto const back = import_qasm(export_qasm(c), layout);
    EXPECT_LE(max_abs_diff(apply_circuit(s, back).final_state,
                           apply_circuit(s, c).final_state),
              kExactTol);
  }
}

TEST(Qasm, import_errors)
{
  auto const layout = RegisterLayout::protocol(1);
  EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg q[4];\n", layout), std::invalid_argument);
  EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg q[5];\nccx q[0],q[1],q[2];\n", layout),
               std::invalid_argument);
  EXPECT_THROW(import_qasm("OPENQASM 2.0;\nqreg q[5];\nx q[7];\n", layout),
               std::invalid_argument);
}

TEST(Qasm, stats)
{
  auto const s = circuit_stats(protocol_circuit(1, "1"));
  EXPECT_EQ(s.columns, 7u);
  EXPECT_EQ(s.gates, 9u);
  EXPECT_EQ(s.depth, 6u);
}

//---------------------------------------------------------------------------//
// JSON

TEST(Json, run_document_round_trip_is_exact)
{
  ProtocolConfig config;
  config.n = 2;
  config.amp0 = std::sqrt(1.0 / 3);
  config.amp1 = std::sqrt(2.0 / 3);
  auto const run = run_protocol(config, Message("10"));
  auto const doc = run_document(run);
  auto const text = doc.dump();
  auto const back = parse_run_document(nlohmann::json::parse(text));

  EXPECT_EQ(back.message, run.message);
  EXPECT_EQ(back.config.n, 2u);
  EXPECT_EQ(back.config.amp0, config.amp0);
  EXPECT_EQ(back.final_state, run.final_state);
  ASSERT_EQ(back.checkpoints.size(), run.checkpoints.size());
  for (std::size_t i = 0; i < run.checkpoints.size(); ++i) {
    EXPECT_EQ(back.checkpoints[i].first, run.checkpoints[i].first);
    EXPECT_EQ(back.checkpoints[i].second, run.checkpoints[i].second);
  }
}

TEST(Json, run_document_shape)
{
  auto const doc = run_document(run_protocol(ProtocolConfig{}, Message("1")));
  EXPECT_EQ(doc.at("message"), "1");
  EXPECT_EQ(doc.at("layout").size(), 5u);
  EXPECT_EQ(doc.at("final").size(), 32u);
  EXPECT_EQ(doc.at("final").at(1).size(), 2u);
  for (auto const& label : kCheckpointLabels) {
    EXPECT_TRUE(doc.at("checkpoints").contains(std::string(label))) << label;
  }
}

TEST(Json, malformed_documents)
{
  auto doc = run_document(run_protocol(ProtocolConfig{}, Message("1")));
  auto bad = doc;
  bad["final"].erase(0);
  EXPECT_ANY_THROW(parse_run_document(bad));
  bad = doc;
  bad.erase("message");
  EXPECT_ANY_THROW(parse_run_document(bad));
  EXPECT_ANY_THROW(amplitudes_from_json(nlohmann::json::parse("[[1,0,0]]")));
}

TEST(Json, branch_and_reports)
{
  auto const run = run_protocol(ProtocolConfig{}, Message("1"));
  nlohmann::json b = decompose_by_register(run.final_state, "R");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].at("label"), "0");
  EXPECT_EQ(b[0].at("registers").at("P"), "1");

  nlohmann::json v = verify_transfer(run, Message("1"));
  EXPECT_EQ(v.at("success"), true);
  EXPECT_FALSE(v.contains("failure_reason"));

  nlohmann::json w = witness_mu_dependence(2);
  EXPECT_EQ(w.at("pass"), true);
  EXPECT_EQ(w.at("measurements").at("pairs").size(), 3u);

  nlohmann::json a = verify_amplitude_immutability(0.6, 0.8, Message("1"));
  EXPECT_EQ(a.at("pass"), true);
  EXPECT_TRUE(a.contains("claim"));
  EXPECT_TRUE(a.contains("parameters"));

  nlohmann::json p = SwapPlan{{1, 6, 10}};
  EXPECT_EQ(p.at("cost"), 3);
}
