#include "interbranch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "interbranch/branches.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/qasm.hpp"
#include "interbranch/serialize.hpp"
#include "interbranch/suites.hpp"
#include "interbranch/swapsynth.hpp"

namespace interbranch {

namespace {

// Amplitudes typed on the command line are normalized when they are within
// this distance of unit norm, and rejected beyond it.
constexpr double kAmplitudeSlack = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProtocolArgs {
  std::string message;
  std::optional<std::size_t> n;
  std::optional<double> amp0;
  std::optional<double> amp1;
  bool no_uncompute = false;
  bool no_swap = false;
  std::string output;
};

void add_protocol_options(CLI::App& cmd, ProtocolArgs& args)
{
  cmd.add_option("--message,-m", args.message, "message bit-string, e.g. 101")
      ->required();
  cmd.add_option("--n", args.n, "message width (defaults to the message length)");
  cmd.add_option("--amp0", args.amp0, "real amplitude of the Q=0 branch");
  cmd.add_option("--amp1", args.amp1, "real amplitude of the Q=1 branch");
  cmd.add_flag("--no-uncompute", args.no_uncompute,
               "skip the P->M memory uncomputation");
  cmd.add_flag("--no-swap", args.no_swap, "skip the X_Q X_R X_F branch swap");
  cmd.add_option("--output,-o", args.output, "output path ('-' for stdout)");
}

std::pair<ProtocolConfig, Message> resolve(ProtocolArgs const& args, std::ostream& err)
{
  std::optional<Message> message;
  try {
    message.emplace(args.message);
  } catch (std::invalid_argument const& e) {
    throw UsageError(std::string("--message: ") + e.what());
  }
  ProtocolConfig config;
  config.n = args.n.value_or(message->width());
  if (config.n != message->width()) {
    throw UsageError("--n " + std::to_string(config.n) +
                     " does not match message width " +
                     std::to_string(message->width()));
  }
  config.uncompute_memory = !args.no_uncompute;
  config.apply_branch_swap = !args.no_swap;

  if (args.amp0.has_value() != args.amp1.has_value()) {
    throw UsageError("--amp0 and --amp1 must be given together");
  }
  if (args.amp0) {
    double a0 = *args.amp0;
    double a1 = *args.amp1;
    if (!std::isfinite(a0) || !std::isfinite(a1) || a0 < 0 || a1 < 0) {
      throw UsageError("amplitudes must be finite and non-negative");
    }
    double const total = a0 * a0 + a1 * a1;
    double const off = std::abs(total - 1.0);
    if (off > kAmplitudeSlack) {
      throw UsageError("amplitudes are not normalized (|amp0|^2 + |amp1|^2 = " +
                       std::to_string(total) + ")");
    }
    if (off > 0) {
      double const scale = 1.0 / std::sqrt(total);
      a0 *= scale;
      a1 *= scale;
      if (off > kExactTol) {
        err << "warning: amplitudes renormalized by a factor " << std::setprecision(12)
            << scale << "\n";
      }
    }
    config.amp0 = a0;
    config.amp1 = a1;
  }
  try {
    config.validate();
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  return {config, *message};
}

/// Writes `text` to `path`, or to `out` when path is "-".
void emit(std::string const& path, std::string const& text, std::ostream& out)
{
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw UsageError("cannot open '" + path + "' for writing");
  }
  file << text;
  if (!file) {
    throw UsageError("failed writing '" + path + "'");
  }
}

std::string format_amplitude(Amplitude a)
{
  std::ostringstream os;
  os << std::showpos << std::fixed << std::setprecision(6) << a.real() << a.imag()
     << 'i';
  return os.str();
}

void print_branches(std::vector<Branch> const& branches, RegisterLayout const& layout,
                    std::ostream& os)
{
  os << "branches on R:\n";
  for (auto const& b : branches) {
    os << "  R=" << b.label.str() << "  amplitude " << format_amplitude(b.amplitude);
    if (b.local_state) {
      for (auto const& r : layout.registers()) {
        os << "  " << r.name << '=' << b.local_state->at(r.name).str();
      }
    } else {
      os << "  (superposition)";
    }
    os << '\n';
  }
}

void print_verdict(TransferVerdict const& v, std::ostream& os)
{
  os << "verdict: " << (v.success ? "success" : "failure");
  if (!v.receiver_paper.empty()) {
    os << "  receiver paper=" << v.receiver_paper.str()
       << " receiver memory=" << v.receiver_memory.str()
       << " sender paper=" << v.sender_paper.str();
  }
  os << '\n';
  if (v.failure_reason) {
    os << "  reason: " << *v.failure_reason << '\n';
  }
  for (auto const& note : v.annotations) {
    os << "  note: " << note << '\n';
  }
}

//---------------------------------------------------------------------------//

int cmd_run(ProtocolArgs const& args, std::ostream& out, std::ostream& err)
{
  auto const [config, message] = resolve(args, err);
  auto const run = run_protocol(config, message);
  auto const verdict = verify_transfer(run, message);
  auto const stats = circuit_stats(build_protocol_circuit(config, message));

  // With the document on stdout the human summary moves to the error stream.
  std::ostream& summary = args.output == "-" ? err : out;
  summary << "message " << message.str() << " (n=" << config.n << ")"
          << (message.blank() ? " [blank]" : "") << '\n';
  summary << "circuit: " << stats.columns << " columns, " << stats.gates
          << " gates, depth " << stats.depth << '\n';
  print_branches(decompose_by_register(run.final_state, "R"),
                 run.final_state.layout(), summary);
  print_verdict(verdict, summary);

  if (!args.output.empty()) {
    emit(args.output, run_document(run).dump(2) + "\n", out);
  }
  return verdict.success ? kExitOk : kExitFailed;
}

int cmd_verify(std::string const& suite, bool as_json, std::ostream& out)
{
  auto const results = run_suite(suite);
  bool all_pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (auto const& r : results) {
    all_pass = all_pass && r.pass;
    if (as_json) {
      doc.push_back({{"suite", r.suite},
                     {"claim", r.claim},
                     {"pass", r.pass},
                     {"measured", r.measured},
                     {"tolerance", r.tolerance},
                     {"detail", r.detail}});
      continue;
    }
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.claim
        << "  (measured " << std::setprecision(3) << r.measured << ", bound "
        << r.tolerance << ")";
    if (!r.detail.empty()) {
      out << "  " << r.detail;
    }
    out << '\n';
  }
  if (as_json) {
    out << doc.dump(2) << '\n';
  } else {
    out << (all_pass ? "all claims verified" : "some claims FAILED") << " ("
        << results.size() << " claims)\n";
  }
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_swap_synth(std::string const& a, std::string const& b, bool as_json,
                   std::ostream& out)
{
  SwapPlan plan;
  try {
    plan = synthesize_swap(FriendSnapshot(a), FriendSnapshot(b));
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    out << nlohmann::json(plan).dump() << '\n';
  } else {
    out << plan.operator_string() << " (cost " << plan.hamming_cost() << ")\n";
  }
  return kExitOk;
}

int cmd_export(ProtocolArgs const& args, std::string const& format, bool measure,
               std::ostream& out, std::ostream& err)
{
  auto const [config, message] = resolve(args, err);
  auto const circuit = build_protocol_circuit(config, message);
  std::string text;
  if (format == "qasm") {
    text = export_qasm(circuit, QasmOptions{measure});
  } else if (format == "json") {
    text = nlohmann::json(circuit).dump(2) + "\n";
  } else {
    throw UsageError("unsupported export format '" + format + "'");
  }
  emit(args.output.empty() ? "-" : args.output, text, out);
  return kExitOk;
}

}  // namespace

//---------------------------------------------------------------------------//

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Inter-branch message transfer simulator", "interbranch"};
  app.require_subcommand(1);

  ProtocolArgs run_args;
  auto* run = app.add_subcommand("run", "run the protocol and check the transfer");
  add_protocol_options(*run, run_args);

  std::string suite = "all";
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite,-s", suite, "theorem1, corollary1, lemma1, "
                                          "corollary2, swapsynth or all");
  verify->add_flag("--json", verify_json, "print results as JSON");

  std::string friend0;
  std::string friend1;
  bool swap_json = false;
  auto* swap = app.add_subcommand("swap-synth", "X string exchanging two friends");
  swap->add_option("friend0", friend0, "friend-0 bit-string")->required();
  swap->add_option("friend1", friend1, "friend-1 bit-string")->required();
  swap->add_flag("--json", swap_json, "print {positions, cost}");

  ProtocolArgs export_args;
  std::string format = "qasm";
  bool measure = false;
  auto* exp = app.add_subcommand("export", "write the protocol circuit");
  add_protocol_options(*exp, export_args);
  exp->add_option("--format,-f", format, "qasm or json");
  exp->add_flag("--measure", measure, "append per-register measurements (qasm)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run) {
      return cmd_run(run_args, out, err);
    }
    if (*verify) {
      auto const names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
      return cmd_verify(suite, verify_json, out);
    }
    if (*swap) {
      return cmd_swap_synth(friend0, friend1, swap_json, out);
    }
    if (*exp) {
      return cmd_export(export_args, format, measure, out, err);
    }
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace interbranch
