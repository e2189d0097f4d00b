#pragma once

// Seeded generators for property-style tests.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "interbranch/statevec.hpp"

namespace gen {

using interbranch::Amplitude;
using interbranch::BitString;
using interbranch::Circuit;
using interbranch::GateOp;
using interbranch::RegisterLayout;
using interbranch::StateVector;

inline StateVector random_state(RegisterLayout const& layout, std::mt19937_64& rng)
{
  std::normal_distribution<double> g;
  std::vector<Amplitude> amps(layout.dimension());
  double norm = 0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) {
    a /= std::sqrt(norm);
  }
  return StateVector(layout, std::move(amps));
}

inline std::vector<std::size_t>
pick_distinct(std::size_t n, std::size_t count, std::mt19937_64& rng)
{
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

/// A random valid op of any kind on `n` qubits.
inline GateOp random_op(std::size_t n, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (;;) {
    switch (rng() % 7) {
      case 0: return GateOp::x(rng() % n);
      case 1: return GateOp::h(rng() % n);
      case 2: return GateOp::ry(rng() % n, angle(rng));
      case 3:
        if (n >= 2) {
          auto q = pick_distinct(n, 2, rng);
          return GateOp::cnot(q[0], q[1]);
        }
        break;
      case 4: return GateOp::multi_x(pick_distinct(n, 1 + rng() % n, rng));
      case 5: {
        std::size_t const nc = n >= 2 ? rng() % 2 : 0;
        std::size_t const nt = 1 + rng() % (n - nc);
        auto q = pick_distinct(n, nc + nt, rng);
        std::vector<std::size_t> controls(q.begin(), q.begin() + nc);
        std::vector<std::size_t> targets(q.begin() + nc, q.end());
        return GateOp::encode(controls, targets,
                              BitString::from_uint(rng(), targets.size()));
      }
      case 6:
        if (n >= 2) {
          std::size_t const w = 1 + rng() % (n / 2);
          auto q = pick_distinct(n, 2 * w, rng);
          return GateOp::transversal_cnot({q.begin(), q.begin() + w},
                                          {q.begin() + w, q.end()});
        }
        break;
    }
  }
}

inline Circuit random_circuit(RegisterLayout const& layout, std::size_t max_ops,
                              std::mt19937_64& rng)
{
  Circuit c(layout);
  auto const count = rng() % (max_ops + 1);
  for (std::size_t k = 0; k < count; ++k) {
    c.add(random_op(layout.total_qubits(), rng));
  }
  return c;
}

}  // namespace gen
