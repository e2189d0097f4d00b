#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "interbranch/bitstring.hpp"
#include "interbranch/branches.hpp"
#include "interbranch/statevec.hpp"

namespace interbranch {

/// Largest message width for which the memory swap family is built densely.
inline constexpr std::size_t kMaxSwapFamilyWidth = 6;

//---------------------------------------------------------------------------//
// Skipping memory uncomputation
//---------------------------------------------------------------------------//

struct NoUncomputeResult {
  StateVector final_state;
  TransferVerdict verdict;
};

/// Runs the equal-amplitude protocol with the P->M uncompute column removed.
/// Throws std::invalid_argument for a blank message.
NoUncomputeResult run_no_uncompute_variant(Message const& message,
                                           bool apply_branch_swap = true);

/// (|000>|0>|0> + |111>|mu>|mu>)/sqrt2 on Q,R,F,M,P, or its image under
/// X_Q X_R X_F when `swapped`.
StateVector no_uncompute_reference_state(Message const& message, bool swapped);

//---------------------------------------------------------------------------//
// Memory-preserving swap family
//---------------------------------------------------------------------------//

/// G = |mu><0| + |0><mu| + sum_j |e_j><e_j| on the 2^n memory space.
struct MemoryPreservingSwap {
  Message mu;
  std::size_t dimension = 0;
  Eigen::MatrixXcd matrix;
};

/*!
 * Orthonormal completion of `seeds` to a basis of C^dimension.
 *
 * Seeds are orthonormalized first. Canonical basis vectors are then visited
 * in index order; each is orthogonalized against everything accepted so far
 * (two Gram-Schmidt passes) and kept when its residual norm exceeds 1e-8.
 * Only the added vectors are returned.
 */
std::vector<Eigen::VectorXcd>
complete_orthonormal_basis(std::span<Eigen::VectorXcd const> seeds,
                           Eigen::Index dimension);

/// Throws std::invalid_argument for a blank message and std::length_error
/// above kMaxSwapFamilyWidth.
MemoryPreservingSwap construct_G(Message const& mu);

struct PairDistance {
  Message first;
  Message second;
  double distance = 0;  // ||(G(first) - G(second))|0>||
};

struct DependenceReport {
  std::size_t n = 0;
  std::size_t nonblank_messages = 0;
  std::vector<PairDistance> pairs;
  double max_unitarity_error = 0;   // ||G^dag G - I||_max
  double max_involution_error = 0;  // ||G^2 - I||_max
  double max_mapping_error = 0;     // ||G|0> - |mu>|| and ||G|mu> - |0>||
  double max_distance_error = 0;    // |distance - sqrt2|
  bool non_constant = false;
  std::string note;
  bool pass = false;
};

/// Exhaustive over all nonblank messages of width n (n <= kMaxSwapFamilyWidth).
DependenceReport witness_mu_dependence(std::size_t n);

//---------------------------------------------------------------------------//
// Branch amplitudes under the swap
//---------------------------------------------------------------------------//

struct AmplitudeReport {
  Amplitude amp0;
  Amplitude amp1;
  Message message{"1"};
  double pre_swap_fidelity = 0;  // against the closed-form pre-swap state
  double message_weight_before = 0;
  double message_weight_after = 0;
  double r0_before = 0;
  double r1_before = 0;
  double r0_after = 0;
  double r1_after = 0;
  bool message_weight_unchanged = false;
  bool branches_exchanged = false;
  bool pass = false;
};

/// Norm of the projection onto the subspace where P holds `message`.
double message_branch_weight(StateVector const& state, Message const& message);

/// Runs the protocol with the given branch amplitudes and compares the P=mu
/// weight and the R-branch magnitudes either side of the swap.
AmplitudeReport verify_amplitude_immutability(Amplitude amp0, Amplitude amp1,
                                              Message const& message);

}  // namespace interbranch
