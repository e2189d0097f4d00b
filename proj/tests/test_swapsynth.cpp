#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "interbranch/protocol.hpp"
#include "interbranch/swapsynth.hpp"

using namespace interbranch;

namespace {

std::vector<std::size_t> brute_force_positions(BitString const& a, BitString const& b)
{
  std::vector<std::size_t> out;
  auto const sa = a.str();
  auto const sb = b.str();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) {
      out.push_back(i + 1);
    }
  }
  return out;
}

}  // namespace

TEST(SynthesizeSwap, ten_qubit_friend)
{
  auto const plan =
      synthesize_swap(FriendSnapshot("0101110101"), FriendSnapshot("1101100100"));
  EXPECT_EQ(plan.x_positions, (std::vector<std::size_t>{1, 6, 10}));
  EXPECT_EQ(plan.hamming_cost(), 3u);
  EXPECT_EQ(plan.operator_string(), "X_1 X_6 X_10");
}

TEST(SynthesizeSwap, identical_friends_need_nothing)
{
  auto const plan = synthesize_swap(FriendSnapshot("0110"), FriendSnapshot("0110"));
  EXPECT_TRUE(plan.x_positions.empty());
  EXPECT_EQ(plan.operator_string(), "identity");
}

TEST(SynthesizeSwap, complementary_friends)
{
  auto const plan = synthesize_swap(FriendSnapshot("000"), FriendSnapshot("111"));
  EXPECT_EQ(plan.x_positions, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(SynthesizeSwap, width_mismatch)
{
  EXPECT_THROW(synthesize_swap(FriendSnapshot("01"), FriendSnapshot("011")),
               std::invalid_argument);
}

TEST(SynthesizeSwap, cost_is_hamming_distance)
{
  std::mt19937_64 rng(61);
  for (std::size_t k = 1; k <= 16; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      auto const a = BitString::from_uint(rng(), k);
      auto const b = BitString::from_uint(rng(), k);
      auto const plan = synthesize_swap(FriendSnapshot(a), FriendSnapshot(b));
      EXPECT_EQ(plan.x_positions, brute_force_positions(a, b));
      // Symmetric in its arguments.
      EXPECT_EQ(plan, synthesize_swap(FriendSnapshot(b), FriendSnapshot(a)));
    }
  }
}

//---------------------------------------------------------------------------//

TEST(ApplySwapPlan, maps_friend0_to_friend1)
{
  auto const layout = RegisterLayout({{"F", 10}});
  auto const s = make_basis_state(layout, {{"F", BitString("0101110101")}});
  auto const plan =
      synthesize_swap(FriendSnapshot("0101110101"), FriendSnapshot("1101100100"));
  auto const out = apply_swap_plan(s, plan, "F");
  auto const expected = make_basis_state(layout, {{"F", BitString("1101100100")}});
  EXPECT_EQ(out, expected);
  EXPECT_EQ(apply_swap_plan(out, plan, "F"), s);
}

TEST(ApplySwapPlan, empty_plan_is_identity)
{
  std::mt19937_64 rng(62);
  auto const layout = RegisterLayout({{"A", 1}, {"F", 3}});
  auto const s = gen::random_state(layout, rng);
  EXPECT_EQ(apply_swap_plan(s, SwapPlan{}, "F"), s);
}

TEST(ApplySwapPlan, acts_only_on_named_register)
{
  // (|0>|01> + |1>|10>)/sqrt2 with plan X_1 X_2 on F gives
  // (|0>|10> + |1>|01>)/sqrt2.
  auto const layout = RegisterLayout({{"A", 1}, {"F", 2}});
  double const h = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> amps(8);
  amps[0b001] = h;
  amps[0b110] = h;
  auto const out = apply_swap_plan(StateVector(layout, amps), SwapPlan{{1, 2}}, "F");
  std::vector<Amplitude> expected(8);
  expected[0b010] = h;
  expected[0b101] = h;
  EXPECT_EQ(out, StateVector(layout, expected));
}

TEST(ApplySwapPlan, bad_position)
{
  auto const layout = RegisterLayout({{"F", 2}});
  auto const s = StateVector::zero(layout);
  EXPECT_THROW(apply_swap_plan(s, SwapPlan{{3}}, "F"), std::out_of_range);
  EXPECT_THROW(apply_swap_plan(s, SwapPlan{{0}}, "F"), std::out_of_range);
}

TEST(ApplySwapPlan, involution_on_random_states)
{
  std::mt19937_64 rng(63);
  auto const layout = RegisterLayout({{"Q", 1}, {"F", 4}});
  for (int trial = 0; trial < 20; ++trial) {
    auto const s = gen::random_state(layout, rng);
    auto const plan = synthesize_swap(FriendSnapshot(BitString::from_uint(rng(), 4)),
                                      FriendSnapshot(BitString::from_uint(rng(), 4)));
    EXPECT_LE(max_abs_diff(apply_swap_plan(apply_swap_plan(s, plan, "F"), plan, "F"), s),
              0.0);
  }
}

//---------------------------------------------------------------------------//

TEST(WideFriend, single_qubit_friend_matches_protocol)
{
  for (auto const* mu : {"0", "1"}) {
    auto const r = wide_friend_protocol_demo(FriendSnapshot("0"), FriendSnapshot("1"),
                                             Message(mu));
    auto const run = run_protocol(ProtocolConfig{}, Message(mu));
    EXPECT_TRUE(r.verdict.success);
    EXPECT_LE(max_abs_diff(r.final_state, run.final_state), kExactTol);
  }
}

TEST(WideFriend, ten_qubit_friend_transfers_message)
{
  std::string const f0 = "0101110101";
  std::string const f1 = "1101100100";
  auto const r =
      wide_friend_protocol_demo(FriendSnapshot(f0), FriendSnapshot(f1), Message("1"));
  EXPECT_EQ(r.plan.hamming_cost(), 3u);
  EXPECT_TRUE(r.verdict.success) << r.verdict.failure_reason.value_or("");

  // Closed form: (|1>|1>|f1>|0>|0> + |0>|0>|f0>|0>|1>)/sqrt2 on Q,R,F,M,P.
  auto const& layout = r.final_state.layout();
  double const h = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> amps(layout.dimension());
  amps[layout.index_of({{"Q", BitString("1")},
                        {"R", BitString("1")},
                        {"F", BitString(f1)},
                        {"M", BitString("0")},
                        {"P", BitString("0")}})] = h;
  amps[layout.index_of({{"Q", BitString("0")},
                        {"R", BitString("0")},
                        {"F", BitString(f0)},
                        {"M", BitString("0")},
                        {"P", BitString("1")}})] = h;
  EXPECT_GE(fidelity(r.final_state, StateVector(layout, amps)), 1.0 - kExactTol);
}

TEST(WideFriend, identical_friends)
{
  auto const r =
      wide_friend_protocol_demo(FriendSnapshot("101"), FriendSnapshot("101"), Message("1"));
  EXPECT_TRUE(r.plan.x_positions.empty());
  EXPECT_TRUE(r.verdict.success) << r.verdict.failure_reason.value_or("");
}

TEST(WideFriend, exhaustive_small_friends)
{
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t a = 0; a < (1u << k); ++a) {
      for (std::uint64_t b = 0; b < (1u << k); ++b) {
        for (std::size_t n = 1; n <= 2; ++n) {
          for (std::uint64_t m = 0; m < (1u << n); ++m) {
            auto const r = wide_friend_protocol_demo(
                FriendSnapshot(BitString::from_uint(a, k)),
                FriendSnapshot(BitString::from_uint(b, k)), Message::from_uint(m, n));
            EXPECT_TRUE(r.verdict.success)
                << a << " " << b << " " << m << ": "
                << r.verdict.failure_reason.value_or("");
          }
        }
      }
    }
  }
}

TEST(WideFriend, errors)
{
  EXPECT_THROW(
      wide_friend_protocol_demo(FriendSnapshot("01"), FriendSnapshot("0"), Message("1")),
      std::invalid_argument);
}
