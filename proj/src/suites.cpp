#include "interbranch/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "interbranch/branches.hpp"
#include "interbranch/nogo.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/swapsynth.hpp"

namespace interbranch {

namespace {

constexpr std::uint64_t kSeed = 0x5eed'b4a2'c0de'0001ULL;

std::vector<Message> all_messages(std::size_t n, bool include_blank)
{
  std::vector<Message> result;
  for (std::uint64_t v = include_blank ? 0 : 1; v < (std::uint64_t{1} << n); ++v) {
    result.push_back(Message::from_uint(v, n));
  }
  return result;
}

ClaimResult bounded(std::string suite, std::string claim, double measured,
                    double tolerance, std::string detail = {})
{
  return {std::move(suite), std::move(claim), measured <= tolerance, measured,
          tolerance, std::move(detail)};
}

double checkpoint_error(ProtocolRun const& run)
{
  double worst = 0;
  for (auto const& [label, state] : run.checkpoints) {
    auto const ref = checkpoint_reference_state(label, run.config, run.message);
    worst = std::max(worst, 1.0 - fidelity(state, ref));
  }
  return worst;
}

//---------------------------------------------------------------------------//

std::vector<ClaimResult> theorem1()
{
  std::vector<ClaimResult> out;
  std::size_t failures = 0;
  std::size_t runs = 0;
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& mu : all_messages(n, true)) {
      ProtocolConfig config;
      config.n = n;
      auto const run = run_protocol(config, mu);
      worst = std::max(worst, checkpoint_error(run));
      failures += verify_transfer(run, mu).success ? 0 : 1;
      ++runs;
    }
  }
  out.push_back(bounded("theorem1", "checkpoints match closed form, n<=3 exhaustive",
                        worst, kExactTol, std::to_string(runs) + " runs"));
  out.push_back(bounded("theorem1", "transfer succeeds, n<=3 exhaustive",
                        static_cast<double>(failures), 0,
                        std::to_string(runs) + " runs"));

  std::mt19937_64 rng(kSeed);
  failures = 0;
  runs = 0;
  worst = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    for (int s = 0; s < 12; ++s) {
      auto const mu = Message::from_uint(pick(rng), n);
      ProtocolConfig config;
      config.n = n;
      auto const run = run_protocol(config, mu);
      worst = std::max(worst, checkpoint_error(run));
      failures += verify_transfer(run, mu).success ? 0 : 1;
      ++runs;
    }
  }
  out.push_back(bounded("theorem1", "checkpoints match closed form, n=4..8 sampled",
                        worst, kExactTol, std::to_string(runs) + " runs"));
  out.push_back(bounded("theorem1", "transfer succeeds, n=4..8 sampled",
                        static_cast<double>(failures), 0,
                        std::to_string(runs) + " runs"));

  // Every column other than the encoder must be the same operator for all
  // messages.
  std::size_t differing = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    ProtocolConfig config;
    config.n = n;
    auto const messages = all_messages(n, true);
    auto const reference = build_protocol_circuit(config, messages.front());
    std::vector<Eigen::MatrixXcd> ref_mats;
    for (auto const& op : reference.ops()) {
      ref_mats.push_back(gate_matrix(op, reference.layout()));
    }
    for (auto const& mu : messages) {
      auto const c = build_protocol_circuit(config, mu);
      for (std::size_t k = 0; k < c.ops().size(); ++k) {
        if (k == kEncoderColumn) {
          continue;
        }
        if (gate_matrix(c.ops()[k], c.layout()) != ref_mats[k]) {
          ++differing;
        }
      }
    }
  }
  out.push_back(bounded("theorem1", "Wigner operations independent of message, n<=3",
                        static_cast<double>(differing), 0));
  return out;
}

std::vector<ClaimResult> corollary1()
{
  std::vector<ClaimResult> out;
  double worst_pre = 0;
  double worst_post = 0;
  std::size_t wrong_verdicts = 0;
  std::size_t runs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& mu : all_messages(n, false)) {
      auto const pre = run_no_uncompute_variant(mu, false);
      auto const post = run_no_uncompute_variant(mu, true);
      worst_pre = std::max(
          worst_pre, 1.0 - fidelity(pre.final_state,
                                    no_uncompute_reference_state(mu, false)));
      worst_post = std::max(
          worst_post, 1.0 - fidelity(post.final_state,
                                     no_uncompute_reference_state(mu, true)));
      auto const& reason = post.verdict.failure_reason;
      bool const cites_memory =
          !post.verdict.success && reason &&
          reason->find("cross-branch memory") != std::string::npos &&
          post.verdict.receiver_memory == mu.bits();
      wrong_verdicts += cites_memory ? 0 : 1;
      ++runs;
    }
  }
  auto const detail = std::to_string(runs) + " nonblank messages";
  out.push_back(bounded("corollary1", "pre-swap state matches closed form, n<=3",
                        worst_pre, kExactTol, detail));
  out.push_back(bounded("corollary1", "post-swap state matches closed form, n<=3",
                        worst_post, kExactTol, detail));
  out.push_back(bounded("corollary1", "transfer fails on cross-branch memory, n<=3",
                        static_cast<double>(wrong_verdicts), 0, detail));
  return out;
}

std::vector<ClaimResult> lemma1()
{
  std::vector<ClaimResult> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const r = witness_mu_dependence(n);
    auto const tag = "n=" + std::to_string(n);
    double const algebra = std::max({r.max_unitarity_error, r.max_involution_error,
                                     r.max_mapping_error});
    out.push_back(bounded("lemma1", "G(mu) unitary, self-inverse, swaps |0>,|mu>, " + tag,
                          algebra, kExactTol,
                          std::to_string(r.nonblank_messages) + " messages"));
    if (r.pairs.empty()) {
      out.push_back({"lemma1", "G(mu)|0> pairwise distance sqrt2, " + tag, true, 0,
                     kExactTol, r.note});
    } else {
      auto c = bounded("lemma1", "G(mu)|0> pairwise distance sqrt2, " + tag,
                       r.max_distance_error, kExactTol,
                       std::to_string(r.pairs.size()) + " pairs");
      c.pass = c.pass && r.non_constant;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<ClaimResult> corollary2()
{
  std::vector<ClaimResult> out;
  auto const paper =
      verify_amplitude_immutability(std::sqrt(1.0 / 3), std::sqrt(2.0 / 3), Message("1"));
  double const err = std::max(
      {std::abs(paper.message_weight_before - std::sqrt(2.0 / 3)),
       std::abs(paper.message_weight_after - std::sqrt(2.0 / 3)),
       std::abs(paper.r0_after - paper.r1_before),
       std::abs(paper.r1_after - paper.r0_before), 1.0 - paper.pre_swap_fidelity});
  auto c = bounded("corollary2", "amp0=sqrt(1/3), amp1=sqrt(2/3): P=mu weight fixed, "
                   "branches exchanged",
                   err, kExactTol);
  c.pass = c.pass && paper.pass;
  out.push_back(std::move(c));

  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> angle(0.0, std::acos(0.0));
  double worst = 0;
  bool all_pass = true;
  int const samples = 40;
  for (int s = 0; s < samples; ++s) {
    double const t = angle(rng);
    std::size_t const n = 1 + static_cast<std::size_t>(s % 3);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    auto const r =
        verify_amplitude_immutability(std::cos(t), std::sin(t), Message::from_uint(pick(rng), n));
    worst = std::max({worst, std::abs(r.message_weight_before - r.message_weight_after),
                      std::abs(r.r0_after - r.r1_before),
                      std::abs(r.r1_after - r.r0_before)});
    all_pass = all_pass && r.pass;
  }
  auto p = bounded("corollary2", "random amplitudes: P=mu weight fixed by swap",
                   worst, kExactTol, std::to_string(samples) + " samples");
  p.pass = p.pass && all_pass;
  out.push_back(std::move(p));
  return out;
}

std::vector<ClaimResult> swapsynth()
{
  std::vector<ClaimResult> out;
  auto const plan =
      synthesize_swap(FriendSnapshot("0101110101"), FriendSnapshot("1101100100"));
  out.push_back({"swapsynth", "0101110101 -> 1101100100 is X_1 X_6 X_10",
                 plan.x_positions == std::vector<std::size_t>{1, 6, 10}, 0, 0,
                 plan.operator_string()});

  std::mt19937_64 rng(kSeed + 3);
  std::size_t mismatches = 0;
  for (int s = 0; s < 200; ++s) {
    std::size_t const k = 1 + static_cast<std::size_t>(rng() % 16);
    std::uint64_t const a = rng() & ((std::uint64_t{1} << k) - 1);
    std::uint64_t const b = rng() & ((std::uint64_t{1} << k) - 1);
    auto const p = synthesize_swap(FriendSnapshot(BitString::from_uint(a, k)),
                                   FriendSnapshot(BitString::from_uint(b, k)));
    std::size_t brute = 0;
    for (std::size_t i = 0; i < k; ++i) {
      brute += ((a >> i) & 1U) != ((b >> i) & 1U) ? 1 : 0;
    }
    mismatches += p.hamming_cost() == brute ? 0 : 1;
  }
  out.push_back(bounded("swapsynth", "cost equals Hamming distance, 200 random pairs",
                        static_cast<double>(mismatches), 0));

  std::size_t failures = 0;
  std::size_t runs = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
        for (std::size_t n = 1; n <= 2; ++n) {
          for (auto const& mu : all_messages(n, true)) {
            auto const r = wide_friend_protocol_demo(
                FriendSnapshot(BitString::from_uint(a, k)),
                FriendSnapshot(BitString::from_uint(b, k)), mu);
            failures += r.verdict.success ? 0 : 1;
            ++runs;
          }
        }
      }
    }
  }
  out.push_back(bounded("swapsynth", "wide-friend transfer succeeds, k<=4, n<=2",
                        static_cast<double>(failures), 0,
                        std::to_string(runs) + " runs"));
  return out;
}

using SuiteFn = std::vector<ClaimResult> (*)();

struct SuiteEntry {
  std::string_view name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"theorem1", theorem1},     {"corollary1", corollary1},
    {"lemma1", lemma1},         {"corollary2", corollary2},
    {"swapsynth", swapsynth},
};

}  // namespace

std::vector<std::string_view> suite_names()
{
  std::vector<std::string_view> names;
  for (auto const& s : kSuites) {
    names.push_back(s.name);
  }
  return names;
}

std::vector<ClaimResult> run_suite(std::string_view name)
{
  std::vector<ClaimResult> results;
  bool matched = false;
  for (auto const& s : kSuites) {
    if (name == "all" || name == s.name) {
      auto part = s.fn();
      results.insert(results.end(), part.begin(), part.end());
      matched = true;
    }
  }
  if (!matched) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return results;
}

}  // namespace interbranch
