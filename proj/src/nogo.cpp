#include "interbranch/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "interbranch/protocol.hpp"

namespace interbranch {

namespace {

void require_nonblank(Message const& message)
{
  if (message.blank()) {
    throw std::invalid_argument("blank message: |0> and |mu> coincide");
  }
}

double branch_magnitude(std::vector<Branch> const& branches, char label)
{
  for (auto const& b : branches) {
    if (b.label.str() == std::string(1, label)) {
      return std::abs(b.amplitude);
    }
  }
  return 0.0;
}

}  // namespace

//---------------------------------------------------------------------------//

NoUncomputeResult run_no_uncompute_variant(Message const& message,
                                           bool apply_branch_swap)
{
  require_nonblank(message);
  ProtocolConfig config;
  config.n = message.width();
  config.uncompute_memory = false;
  config.apply_branch_swap = apply_branch_swap;
  auto run = run_protocol(config, message);
  auto verdict = verify_transfer(run, message);
  return {std::move(run.final_state), std::move(verdict)};
}

StateVector no_uncompute_reference_state(Message const& message, bool swapped)
{
  auto const layout = RegisterLayout::protocol(message.width());
  auto const zero = BitString::zeros(message.width());
  auto const lo = swapped ? BitString("1") : BitString("0");
  auto const hi = swapped ? BitString("0") : BitString("1");
  std::vector<Amplitude> amps(layout.dimension());
  double const s = 1.0 / std::sqrt(2.0);
  amps[layout.index_of({{"Q", lo}, {"R", lo}, {"F", lo}, {"M", zero}, {"P", zero}})] = s;
  amps[layout.index_of({{"Q", hi},
                        {"R", hi},
                        {"F", hi},
                        {"M", message.bits()},
                        {"P", message.bits()}})] = s;
  return StateVector(layout, std::move(amps));
}

//---------------------------------------------------------------------------//

std::vector<Eigen::VectorXcd>
complete_orthonormal_basis(std::span<Eigen::VectorXcd const> seeds,
                           Eigen::Index dimension)
{
  constexpr double kIndependence = 1e-8;
  std::vector<Eigen::VectorXcd> basis;
  auto orthogonalize = [&basis](Eigen::VectorXcd v) {
    for (int pass = 0; pass < 2; ++pass) {
      for (auto const& b : basis) {
        v -= b.dot(v) * b;  // dot conjugates its left argument
      }
    }
    return v;
  };

  for (auto const& seed : seeds) {
    if (seed.size() != dimension) {
      throw std::invalid_argument("seed vector has the wrong dimension");
    }
    auto v = orthogonalize(seed);
    if (v.norm() <= kIndependence) {
      throw std::invalid_argument("seed vectors are linearly dependent");
    }
    basis.push_back(v / v.norm());
  }

  std::vector<Eigen::VectorXcd> added;
  for (Eigen::Index k = 0;
       k < dimension && static_cast<Eigen::Index>(basis.size()) < dimension; ++k) {
    auto v = orthogonalize(Eigen::VectorXcd::Unit(dimension, k));
    if (v.norm() > kIndependence) {
      v /= v.norm();
      basis.push_back(v);
      added.push_back(v);
    }
  }
  return added;
}

MemoryPreservingSwap construct_G(Message const& mu)
{
  require_nonblank(mu);
  if (mu.width() > kMaxSwapFamilyWidth) {
    throw std::length_error("memory swap family limited to width " +
                            std::to_string(kMaxSwapFamilyWidth));
  }
  auto const dim = Eigen::Index{1} << mu.width();
  Eigen::VectorXcd const zero = Eigen::VectorXcd::Unit(dim, 0);
  Eigen::VectorXcd const target =
      Eigen::VectorXcd::Unit(dim, static_cast<Eigen::Index>(mu.bits().to_uint()));

  std::vector<Eigen::VectorXcd> const seeds{zero, target};
  Eigen::MatrixXcd g = target * zero.adjoint() + zero * target.adjoint();
  for (auto const& e : complete_orthonormal_basis(seeds, dim)) {
    g += e * e.adjoint();
  }
  return {mu, static_cast<std::size_t>(dim), std::move(g)};
}

DependenceReport witness_mu_dependence(std::size_t n)
{
  if (n < 1 || n > kMaxSwapFamilyWidth) {
    throw std::length_error("witness_mu_dependence requires 1 <= n <= " +
                            std::to_string(kMaxSwapFamilyWidth));
  }
  DependenceReport report;
  report.n = n;

  std::vector<MemoryPreservingSwap> family;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    family.push_back(construct_G(Message::from_uint(v, n)));
  }
  report.nonblank_messages = family.size();

  for (auto const& g : family) {
    auto const dim = static_cast<Eigen::Index>(g.dimension);
    auto const id = Eigen::MatrixXcd::Identity(dim, dim);
    report.max_unitarity_error =
        std::max(report.max_unitarity_error,
                 (g.matrix.adjoint() * g.matrix - id).cwiseAbs().maxCoeff());
    report.max_involution_error = std::max(
        report.max_involution_error, (g.matrix * g.matrix - id).cwiseAbs().maxCoeff());

    auto const mu_index = static_cast<Eigen::Index>(g.mu.bits().to_uint());
    Eigen::VectorXcd const zero = Eigen::VectorXcd::Unit(dim, 0);
    Eigen::VectorXcd const target = Eigen::VectorXcd::Unit(dim, mu_index);
    report.max_mapping_error =
        std::max({report.max_mapping_error, (g.matrix * zero - target).norm(),
                  (g.matrix * target - zero).norm()});
  }

  double const sqrt2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      double const d = (family[i].matrix.col(0) - family[j].matrix.col(0)).norm();
      report.pairs.push_back({family[i].mu, family[j].mu, d});
      report.max_distance_error =
          std::max(report.max_distance_error, std::abs(d - sqrt2));
    }
  }

  report.non_constant = !report.pairs.empty() &&
                        std::all_of(report.pairs.begin(), report.pairs.end(),
                                    [](auto const& p) { return p.distance > 0.5; });
  if (report.pairs.empty()) {
    report.note = "lemma requires >= 2 messages to witness";
  } else {
    report.note = "G(mu)|0> = |mu> differs for every pair of messages, so no "
                  "single message-independent unitary realizes the family";
  }
  bool const algebra_ok = report.max_unitarity_error <= kExactTol &&
                          report.max_involution_error <= kExactTol &&
                          report.max_mapping_error <= kExactTol &&
                          report.max_distance_error <= kExactTol;
  report.pass = algebra_ok && (report.pairs.empty() || report.non_constant);
  return report;
}

//---------------------------------------------------------------------------//

double message_branch_weight(StateVector const& state, Message const& message)
{
  auto const& layout = state.layout();
  double sum = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (layout.extract(i, "P") == message.bits()) {
      sum += std::norm(state[i]);
    }
  }
  return std::sqrt(sum);
}

AmplitudeReport verify_amplitude_immutability(Amplitude amp0, Amplitude amp1,
                                              Message const& message)
{
  require_nonblank(message);
  ProtocolConfig config;
  config.n = message.width();
  config.amp0 = amp0;
  config.amp1 = amp1;
  config.validate();

  auto const run = run_protocol(config, message);
  auto const& before = run.checkpoint("eq6");
  auto const& after = run.final_state;

  AmplitudeReport r{amp0, amp1, message};
  r.pre_swap_fidelity =
      fidelity(before, checkpoint_reference_state("eq6", config, message));
  r.message_weight_before = message_branch_weight(before, message);
  r.message_weight_after = message_branch_weight(after, message);

  auto const pre = decompose_by_register(before, "R");
  auto const post = decompose_by_register(after, "R");
  r.r0_before = branch_magnitude(pre, '0');
  r.r1_before = branch_magnitude(pre, '1');
  r.r0_after = branch_magnitude(post, '0');
  r.r1_after = branch_magnitude(post, '1');

  r.message_weight_unchanged =
      std::abs(r.message_weight_before - r.message_weight_after) <= kExactTol &&
      std::abs(r.message_weight_before - std::abs(amp1)) <= kExactTol;
  r.branches_exchanged = std::abs(r.r0_after - r.r1_before) <= kExactTol &&
                         std::abs(r.r1_after - r.r0_before) <= kExactTol;
  r.pass = r.message_weight_unchanged && r.branches_exchanged &&
           r.pre_swap_fidelity >= 1.0 - kExactTol;
  return r;
}

}  // namespace interbranch
