#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "interbranch/cli.hpp"
#include "interbranch/serialize.hpp"

using namespace interbranch;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args)
{
  args.insert(args.begin(), "interbranch");
  std::vector<char const*> argv;
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(std::string const& haystack, std::string const& needle)
{
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path scratch(std::string const& name)
{
  auto dir = std::filesystem::temp_directory_path() / "interbranch_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, run_success)
{
  auto const r = invoke({"run", "--message", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "verdict: success"));
  EXPECT_TRUE(contains(r.out, "R=0"));
  EXPECT_TRUE(contains(r.out, "R=1"));
}

TEST(Cli, run_without_uncompute_fails)
{
  auto const r = invoke({"run", "-m", "1", "--no-uncompute"});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_TRUE(contains(r.out, "cross-branch memory"));
}

TEST(Cli, run_without_swap_fails)
{
  EXPECT_EQ(invoke({"run", "-m", "10", "--no-swap"}).code, kExitFailed);
}

TEST(Cli, run_blank_message_is_annotated)
{
  auto const r = invoke({"run", "-m", "000"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "blank message"));
}

TEST(Cli, run_argument_errors)
{
  EXPECT_EQ(invoke({"run"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", ""}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", "12"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", "10", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", "10110101101"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", "1", "--amp0", "0.6"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "-m", "1", "--amp0", "-0.6", "--amp1", "0.8"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
}

TEST(Cli, amplitude_normalization)
{
  auto const exact = invoke({"run", "-m", "1", "--amp0", "0.6", "--amp1", "0.8"});
  EXPECT_EQ(exact.code, kExitOk);
  EXPECT_FALSE(contains(exact.err, "warning"));

  auto const close = invoke({"run", "-m", "1", "--amp0", "0.6", "--amp1", "0.8000001"});
  EXPECT_EQ(close.code, kExitOk);
  EXPECT_TRUE(contains(close.err, "warning: amplitudes renormalized"));

  auto const far = invoke({"run", "-m", "1", "--amp0", "0.6", "--amp1", "0.9"});
  EXPECT_EQ(far.code, kExitUsage);
  EXPECT_TRUE(contains(far.err, "not normalized"));
}

TEST(Cli, run_document_to_file_round_trips)
{
  auto const path = scratch("run.json");
  auto const r = invoke({"run", "-m", "101", "-o", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  auto const doc = nlohmann::json::parse(in);
  auto const back = parse_run_document(doc);
  EXPECT_EQ(back.message.str(), "101");
  EXPECT_EQ(back.final_state, run_protocol(back.config, back.message).final_state);
}

TEST(Cli, run_document_to_stdout)
{
  auto const r = invoke({"run", "-m", "1", "-o", "-"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::accept(r.out));
  EXPECT_TRUE(contains(r.err, "verdict: success"));
}

TEST(Cli, unwritable_output)
{
  auto const r = invoke({"run", "-m", "1", "-o", "/nonexistent-dir/x/run.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(contains(r.err, "cannot open"));
}

TEST(Cli, verify_suites)
{
  for (auto const* suite : {"theorem1", "corollary1", "lemma1", "corollary2"}) {
    auto const r = invoke({"verify", "--suite", suite});
    EXPECT_EQ(r.code, kExitOk) << suite << "\n" << r.out;
    EXPECT_TRUE(contains(r.out, "all claims verified")) << suite;
    EXPECT_FALSE(contains(r.out, "[FAIL]")) << suite;
  }
}

TEST(Cli, verify_json)
{
  auto const r = invoke({"verify", "-s", "corollary2", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  auto const doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_FALSE(doc.empty());
  for (auto const& c : doc) {
    EXPECT_EQ(c.at("pass"), true);
  }
}

TEST(Cli, verify_unknown_suite)
{
  auto const r = invoke({"verify", "--suite", "theorem9"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(contains(r.err, "unknown suite"));
}

TEST(Cli, swap_synth)
{
  auto const r = invoke({"swap-synth", "0101110101", "1101100100"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "X_1 X_6 X_10 (cost 3)\n");

  auto const j = invoke({"swap-synth", "0101110101", "1101100100", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out),
            nlohmann::json::parse(R"({"positions":[1,6,10],"cost":3})"));

  EXPECT_EQ(invoke({"swap-synth", "0110", "0110"}).out, "identity (cost 0)\n");
  EXPECT_EQ(invoke({"swap-synth", "01", "011"}).code, kExitUsage);
  EXPECT_EQ(invoke({"swap-synth", "01", "0a"}).code, kExitUsage);
  EXPECT_EQ(invoke({"swap-synth", "01"}).code, kExitUsage);
}

TEST(Cli, export_formats)
{
  auto const q = invoke({"export", "-m", "1"});
  EXPECT_EQ(q.code, kExitOk);
  EXPECT_TRUE(q.out.starts_with("OPENQASM 2.0;"));

  auto const m = invoke({"export", "-m", "1", "--measure"});
  EXPECT_TRUE(contains(m.out, "measure q[4] -> c_P[0];"));

  auto const j = invoke({"export", "-m", "11", "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  auto const doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("ops").size(), 7u);

  auto const bad = invoke({"export", "-m", "1", "-f", "quil"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_TRUE(contains(bad.err, "unsupported export format"));
}

TEST(Cli, help)
{
  auto const r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "swap-synth"));
}

//---------------------------------------------------------------------------//
// The installed binary

TEST(CliBinary, exit_codes)
{
  std::string const bin = INTERBRANCH_TOOL_PATH;
  auto status = [&](std::string const& args) {
    int const s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("run --message 1"), 0);
  EXPECT_EQ(status("run --message 1 --no-uncompute"), 2);
  EXPECT_EQ(status("run --message ''"), 1);
  EXPECT_EQ(status("swap-synth 0101110101 1101100100"), 0);
  EXPECT_EQ(status("export --message 101 --format xml"), 1);
}
