#include "interbranch/statevec.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace interbranch {

//---------------------------------------------------------------------------//
// RegisterLayout
//---------------------------------------------------------------------------//

RegisterLayout::RegisterLayout(
    std::vector<std::pair<std::string, std::size_t>> const& registers)
{
  std::set<std::string> seen;
  for (auto const& [name, width] : registers) {
    if (name.empty()) {
      throw std::invalid_argument("register name must be non-empty");
    }
    if (width == 0) {
      throw std::invalid_argument("register '" + name + "' has zero width");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate register name '" + name + "'");
    }
    registers_.push_back(Register{name, width, total_});
    total_ += width;
  }
  if (total_ > kMaxStateQubits) {
    throw std::length_error("layout has " + std::to_string(total_) +
                            " qubits; limit is " +
                            std::to_string(kMaxStateQubits));
  }
}

RegisterLayout RegisterLayout::protocol(std::size_t message_width,
                                        std::size_t friend_width)
{
  return RegisterLayout({{"Q", 1},
                         {"R", 1},
                         {"F", friend_width},
                         {"M", message_width},
                         {"P", message_width}});
}

bool RegisterLayout::contains(std::string_view name) const
{
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](Register const& r) { return r.name == name; });
}

Register const& RegisterLayout::at(std::string_view name) const
{
  for (auto const& r : registers_) {
    if (r.name == name) {
      return r;
    }
  }
  throw std::invalid_argument("unknown register '" + std::string(name) + "'");
}

std::size_t RegisterLayout::qubit(std::string_view name, std::size_t bit) const
{
  auto const& r = this->at(name);
  if (bit >= r.width) {
    throw std::out_of_range("bit " + std::to_string(bit) +
                            " out of range for register '" + r.name + "'");
  }
  return r.offset + bit;
}

std::vector<std::size_t> RegisterLayout::qubits(std::string_view name) const
{
  auto const& r = this->at(name);
  std::vector<std::size_t> result(r.width);
  std::iota(result.begin(), result.end(), r.offset);
  return result;
}

BitString RegisterLayout::extract(std::size_t index, std::string_view name) const
{
  auto const& r = this->at(name);
  std::string bits(r.width, '0');
  for (std::size_t b = 0; b < r.width; ++b) {
    if (index & this->mask(r.offset + b)) {
      bits[b] = '1';
    }
  }
  return BitString(bits);
}

std::size_t
RegisterLayout::index_of(std::map<std::string, BitString> const& assignment) const
{
  for (auto const& [name, bits] : assignment) {
    if (!this->contains(name)) {
      throw std::invalid_argument("unknown register '" + name + "'");
    }
  }
  std::size_t index = 0;
  for (auto const& r : registers_) {
    auto it = assignment.find(r.name);
    if (it == assignment.end()) {
      throw std::invalid_argument("register '" + r.name + "' is not assigned");
    }
    if (it->second.width() != r.width) {
      throw std::invalid_argument(
          "register '" + r.name + "' has width " + std::to_string(r.width) +
          " but was assigned \"" + it->second.str() + "\"");
    }
    for (std::size_t b = 0; b < r.width; ++b) {
      if (it->second[b]) {
        index |= this->mask(r.offset + b);
      }
    }
  }
  return index;
}

//---------------------------------------------------------------------------//
// StateVector
//---------------------------------------------------------------------------//

StateVector::StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes))
{
  if (amps_.size() != layout_.dimension()) {
    throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                " does not match layout dimension " +
                                std::to_string(layout_.dimension()));
  }
  for (auto const& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
}

StateVector StateVector::zero(RegisterLayout layout)
{
  std::vector<Amplitude> amps(layout.dimension());
  amps[0] = 1.0;
  return StateVector(std::move(layout), std::move(amps));
}

double StateVector::norm() const
{
  double sum = 0;
  for (auto const& a : amps_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

StateVector make_basis_state(RegisterLayout const& layout,
                             std::map<std::string, BitString> const& assignment)
{
  std::vector<Amplitude> amps(layout.dimension());
  amps[layout.index_of(assignment)] = 1.0;
  return StateVector(layout, std::move(amps));
}

//---------------------------------------------------------------------------//
// GateOp
//---------------------------------------------------------------------------//

std::string_view to_string(GateKind kind)
{
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::RY: return "RY";
    case GateKind::CNOT: return "CNOT";
    case GateKind::MULTI_X: return "MULTI_X";
    case GateKind::ENCODE_MU: return "ENCODE_MU";
    case GateKind::TRANSVERSAL_CNOT: return "TRANSVERSAL_CNOT";
  }
  return "?";
}

GateOp GateOp::x(std::size_t target)
{
  return GateOp{GateKind::X, {target}, {}, std::nullopt, 0.0};
}

GateOp GateOp::h(std::size_t target)
{
  return GateOp{GateKind::H, {target}, {}, std::nullopt, 0.0};
}

GateOp GateOp::ry(std::size_t target, double angle)
{
  return GateOp{GateKind::RY, {target}, {}, std::nullopt, angle};
}

GateOp GateOp::cnot(std::size_t control, std::size_t target)
{
  return GateOp{GateKind::CNOT, {target}, {control}, std::nullopt, 0.0};
}

GateOp GateOp::multi_x(std::vector<std::size_t> targets)
{
  return GateOp{GateKind::MULTI_X, std::move(targets), {}, std::nullopt, 0.0};
}

GateOp GateOp::encode(std::vector<std::size_t> controls,
                      std::vector<std::size_t> targets, BitString payload)
{
  return GateOp{GateKind::ENCODE_MU, std::move(targets), std::move(controls),
                std::move(payload), 0.0};
}

GateOp GateOp::transversal_cnot(std::vector<std::size_t> controls,
                                std::vector<std::size_t> targets)
{
  return GateOp{GateKind::TRANSVERSAL_CNOT, std::move(targets),
                std::move(controls), std::nullopt, 0.0};
}

void GateOp::validate(RegisterLayout const& layout) const
{
  auto fail = [&](std::string const& why) {
    throw std::invalid_argument(std::string(to_string(kind)) + ": " + why);
  };
  auto const n = layout.total_qubits();
  std::set<std::size_t> tset;
  std::set<std::size_t> cset;
  for (auto t : targets) {
    if (t >= n) {
      fail("target " + std::to_string(t) + " out of range");
    }
    if (!tset.insert(t).second) {
      fail("duplicate target " + std::to_string(t));
    }
  }
  for (auto c : controls) {
    if (c >= n) {
      fail("control " + std::to_string(c) + " out of range");
    }
    if (!cset.insert(c).second) {
      fail("duplicate control " + std::to_string(c));
    }
    if (tset.count(c)) {
      fail("qubit " + std::to_string(c) + " is both control and target");
    }
  }
  if (targets.empty()) {
    fail("no targets");
  }

  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RY:
      if (targets.size() != 1 || !controls.empty()) {
        fail("expects one target and no controls");
      }
      if (!std::isfinite(angle)) {
        fail("non-finite angle");
      }
      break;
    case GateKind::CNOT:
      if (targets.size() != 1 || controls.size() != 1) {
        fail("expects one control and one target");
      }
      break;
    case GateKind::MULTI_X:
      if (!controls.empty()) {
        fail("takes no controls");
      }
      break;
    case GateKind::ENCODE_MU:
      if (!payload) {
        fail("missing payload");
      }
      if (payload->width() != targets.size()) {
        fail("payload width " + std::to_string(payload->width()) +
             " does not match target width " + std::to_string(targets.size()));
      }
      break;
    case GateKind::TRANSVERSAL_CNOT:
      if (controls.size() != targets.size()) {
        fail("control and target registers differ in width");
      }
      break;
  }
}

//---------------------------------------------------------------------------//
// Circuit
//---------------------------------------------------------------------------//

Circuit& Circuit::add(GateOp op)
{
  op.validate(layout_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::mark(std::string label)
{
  for (auto const& cp : checkpoints_) {
    if (cp.label == label) {
      throw std::invalid_argument("duplicate checkpoint label '" + label + "'");
    }
  }
  checkpoints_.push_back(Checkpoint{ops_.size(), std::move(label)});
  return *this;
}

Circuit Circuit::inverse() const
{
  Circuit result(layout_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    GateOp op = *it;
    if (op.kind == GateKind::RY) {
      op.angle = -op.angle;
    }
    result.add(std::move(op));
  }
  return result;
}

//---------------------------------------------------------------------------//
// Application
//---------------------------------------------------------------------------//

namespace {

std::size_t mask_of(RegisterLayout const& layout,
                    std::vector<std::size_t> const& qubits)
{
  std::size_t m = 0;
  for (auto q : qubits) {
    m |= layout.mask(q);
  }
  return m;
}

// Applies an op whose action is a basis permutation index -> index ^ flip.
// Controls are never targets, so flip(index ^ flip(index)) == flip(index).
template<class FlipFn>
void permute(std::span<Amplitude const> in, std::span<Amplitude> out,
             FlipFn&& flip)
{
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i ^ flip(i)] = in[i];
  }
}

void apply_single(std::span<Amplitude> amps, std::size_t m, Amplitude u00,
                  Amplitude u01, Amplitude u10, Amplitude u11)
{
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & m) {
      continue;
    }
    Amplitude const a = amps[i];
    Amplitude const b = amps[i | m];
    amps[i] = u00 * a + u01 * b;
    amps[i | m] = u10 * a + u11 * b;
  }
}

}  // namespace

StateVector apply_gate(StateVector const& state, GateOp const& op)
{
  auto const& layout = state.layout();
  op.validate(layout);

  StateVector result = state;
  auto in = state.amplitudes();
  auto out = result.amplitudes();

  switch (op.kind) {
    case GateKind::H: {
      double const s = 1.0 / std::sqrt(2.0);
      apply_single(out, layout.mask(op.targets[0]), s, s, s, -s);
      break;
    }
    case GateKind::RY: {
      double const c = std::cos(op.angle / 2);
      double const s = std::sin(op.angle / 2);
      apply_single(out, layout.mask(op.targets[0]), c, -s, s, c);
      break;
    }
    case GateKind::X:
    case GateKind::MULTI_X: {
      auto const flip = mask_of(layout, op.targets);
      permute(in, out, [flip](std::size_t) { return flip; });
      break;
    }
    case GateKind::CNOT:
    case GateKind::ENCODE_MU: {
      auto const cmask = mask_of(layout, op.controls);
      std::size_t flip = layout.mask(op.targets[0]);
      if (op.kind == GateKind::ENCODE_MU) {
        flip = 0;
        for (std::size_t b = 0; b < op.targets.size(); ++b) {
          if ((*op.payload)[b]) {
            flip |= layout.mask(op.targets[b]);
          }
        }
      }
      permute(in, out, [cmask, flip](std::size_t i) {
        return (i & cmask) == cmask ? flip : std::size_t{0};
      });
      break;
    }
    case GateKind::TRANSVERSAL_CNOT: {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t k = 0; k < op.targets.size(); ++k) {
        pairs.emplace_back(layout.mask(op.controls[k]),
                           layout.mask(op.targets[k]));
      }
      permute(in, out, [&pairs](std::size_t i) {
        std::size_t flip = 0;
        for (auto const& [c, t] : pairs) {
          if (i & c) {
            flip |= t;
          }
        }
        return flip;
      });
      break;
    }
  }
  return result;
}

CircuitResult apply_circuit(StateVector const& state, Circuit const& circuit)
{
  if (!(state.layout() == circuit.layout())) {
    throw std::invalid_argument("circuit layout does not match state layout");
  }
  CircuitResult result{state, {}};
  auto const& cps = circuit.checkpoints();
  auto snapshot = [&](std::size_t applied) {
    for (auto const& cp : cps) {
      if (cp.after_ops == applied) {
        result.snapshots.emplace(cp.label, result.final_state);
      }
    }
  };
  snapshot(0);
  for (std::size_t k = 0; k < circuit.ops().size(); ++k) {
    result.final_state = apply_gate(result.final_state, circuit.ops()[k]);
    snapshot(k + 1);
  }
  return result;
}

Amplitude inner_product(StateVector const& a, StateVector const& b)
{
  if (!(a.layout() == b.layout())) {
    throw std::invalid_argument("inner product of states with different layouts");
  }
  Amplitude sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::conj(a[i]) * b[i];
  }
  return sum;
}

double fidelity(StateVector const& a, StateVector const& b)
{
  return std::norm(inner_product(a, b));
}

double max_abs_diff(StateVector const& a, StateVector const& b)
{
  if (!(a.layout() == b.layout())) {
    throw std::invalid_argument("comparing states with different layouts");
  }
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

Eigen::MatrixXcd gate_matrix(GateOp const& op, RegisterLayout const& layout)
{
  if (layout.total_qubits() > kMaxDenseQubits) {
    throw std::length_error("dense gate matrix limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits");
  }
  auto const dim = layout.dimension();
  Eigen::MatrixXcd result(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Amplitude> basis(dim);
    basis[col] = 1.0;
    auto const image = apply_gate(StateVector(layout, std::move(basis)), op);
    for (std::size_t row = 0; row < dim; ++row) {
      result(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          image[row];
    }
  }
  return result;
}

}  // namespace interbranch
