// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtele/qstate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qtele/errors.h"
#include "qtele/tolerances.h"

namespace qtele {
namespace {

std::size_t bit_shift(std::size_t num_qubits, std::size_t position) {
  return num_qubits - 1 - position;
}

// Bit shifts of `targets` within a register labeled by `labels`.
std::vector<std::size_t> target_shifts(const StateVector& state,
                                       const std::vector<Label>& targets) {
  std::vector<std::size_t> shifts;
  shifts.reserve(targets.size());
  for (const Label& t : targets) {
    std::size_t s = bit_shift(state.num_qubits(), state.position(t));
    if (std::find(shifts.begin(), shifts.end(), s) != shifts.end()) {
      throw LabelError("repeated target label '" + t + "'");
    }
    shifts.push_back(s);
  }
  return shifts;
}

// Scatters the bits of `sub` (first target = MSB) into a full index.
std::size_t scatter(std::size_t sub, const std::vector<std::size_t>& shifts) {
  std::size_t k = shifts.size();
  std::size_t out = 0;
  for (std::size_t j = 0; j < k; ++j) {
    out |= ((sub >> (k - 1 - j)) & 1u) << shifts[j];
  }
  return out;
}

}  // namespace

StateVector::StateVector(std::vector<Label> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.size() > kMaxQubits) {
    throw LabelError("at most " + std::to_string(kMaxQubits) + " qubits are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw LabelError("duplicate qubit label '" + labels_[i] + "'");
      }
    }
  }
  if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw LabelError("amplitude count " + std::to_string(amplitudes_.size()) +
                     " does not match 2^" + std::to_string(labels_.size()));
  }
}

StateVector StateVector::basis(std::vector<Label> labels, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << labels.size());
  if (index >= amps.size()) {
    throw LabelError("basis index out of range");
  }
  amps[index] = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

Complex StateVector::amplitude(std::string_view bits) const {
  if (bits.size() != num_qubits()) {
    throw LabelError("bit string length does not match qubit count");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw LabelError("bit string may only contain '0' and '1'");
    }
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  return amplitudes_[index];
}

std::size_t StateVector::position(const Label& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw LabelError("unknown qubit label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool StateVector::has_label(const Label& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector StateVector::relabeled(std::vector<Label> labels) const {
  if (labels.size() != labels_.size()) {
    throw LabelError("relabel must keep the qubit count");
  }
  return StateVector(std::move(labels), amplitudes_);
}

DenseOperator::DenseOperator(std::size_t arity, std::vector<Complex> entries, bool unitary)
    : arity_(arity), dim_(std::size_t{1} << arity), entries_(std::move(entries)), unitary_(unitary) {
  if (arity_ > kMaxQubits) {
    throw LabelError("operator arity exceeds " + std::to_string(kMaxQubits));
  }
  if (entries_.size() != dim_ * dim_) {
    throw LabelError("operator entry count does not match (2^arity)^2");
  }
}

DenseOperator DenseOperator::general(std::size_t arity, std::vector<Complex> entries) {
  return DenseOperator(arity, std::move(entries), false);
}

DenseOperator DenseOperator::unitary(std::size_t arity, std::vector<Complex> entries) {
  DenseOperator op(arity, std::move(entries), false);
  DenseOperator product = op.adjoint() * op;
  if (max_abs_diff(product, identity(arity)) > kEpsNorm) {
    throw InvariantError("operator is not unitary within tolerance");
  }
  op.unitary_ = true;
  return op;
}

DenseOperator DenseOperator::identity(std::size_t arity) {
  std::size_t dim = std::size_t{1} << arity;
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return DenseOperator(arity, std::move(e), true);
}

DenseOperator DenseOperator::outer(const StateVector& ket, const StateVector& bra) {
  if (ket.num_qubits() != bra.num_qubits()) {
    throw LabelError("outer product needs equal qubit counts");
  }
  std::size_t dim = ket.dim();
  std::vector<Complex> e(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) e[r * dim + c] = ket[r] * std::conj(bra[c]);
  }
  return DenseOperator(ket.num_qubits(), std::move(e), false);
}

DenseOperator DenseOperator::kron(const DenseOperator& a, const DenseOperator& b) {
  std::size_t dim = a.dim_ * b.dim_;
  std::vector<Complex> e(dim * dim);
  for (std::size_t ar = 0; ar < a.dim_; ++ar) {
    for (std::size_t ac = 0; ac < a.dim_; ++ac) {
      Complex av = a(ar, ac);
      for (std::size_t br = 0; br < b.dim_; ++br) {
        for (std::size_t bc = 0; bc < b.dim_; ++bc) {
          e[(ar * b.dim_ + br) * dim + ac * b.dim_ + bc] = av * b(br, bc);
        }
      }
    }
  }
  return DenseOperator(a.arity_ + b.arity_, std::move(e), a.unitary_ && b.unitary_);
}

DenseOperator DenseOperator::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
  }
  return DenseOperator(arity_, std::move(e), unitary_);
}

bool DenseOperator::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

double DenseOperator::max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) {
    throw LabelError("operator dimensions differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries_[i] - b.entries_[i]));
  }
  return worst;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw LabelError("operator dimensions differ");
  std::size_t n = a.dim_;
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex v = a(r, k);
      if (v == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) e[r * n + c] += v * b(k, c);
    }
  }
  return DenseOperator(a.arity_, std::move(e), a.unitary_ && b.unitary_);
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw LabelError("operator dimensions differ");
  std::vector<Complex> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
  return DenseOperator(a.arity_, std::move(e), false);
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim_ != b.dim_) throw LabelError("operator dimensions differ");
  std::vector<Complex> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
  return DenseOperator(a.arity_, std::move(e), false);
}

DenseOperator operator*(Complex scale, const DenseOperator& a) {
  std::vector<Complex> e(a.entries_);
  for (Complex& v : e) v *= scale;
  bool still_unitary = a.unitary_ && std::abs(std::abs(scale) - 1.0) <= kEpsNorm;
  return DenseOperator(a.arity_, std::move(e), still_unitary);
}

StateVector tensor(const StateVector& s1, const StateVector& s2) {
  std::vector<Label> labels = s1.labels();
  for (const Label& l : s2.labels()) {
    if (s1.has_label(l)) {
      throw LabelError("label collision on '" + l + "'");
    }
    labels.push_back(l);
  }
  if (labels.size() > kMaxQubits) {
    throw LabelError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
  }
  std::vector<Complex> amps;
  amps.reserve(s1.dim() * s2.dim());
  for (const Complex& a : s1.amplitudes()) {
    for (const Complex& b : s2.amplitudes()) amps.push_back(a * b);
  }
  return StateVector(std::move(labels), std::move(amps));
}

StateVector apply_operator(const StateVector& state, const DenseOperator& op,
                           const std::vector<Label>& targets) {
  if (op.arity() != targets.size()) {
    throw LabelError("operator arity " + std::to_string(op.arity()) + " does not match " +
                     std::to_string(targets.size()) + " target labels");
  }
  std::vector<std::size_t> shifts = target_shifts(state, targets);
  std::size_t target_mask = 0;
  for (std::size_t s : shifts) target_mask |= std::size_t{1} << s;

  std::size_t k = op.dim();
  std::vector<std::size_t> offsets(k);
  for (std::size_t g = 0; g < k; ++g) offsets[g] = scatter(g, shifts);

  std::span<const Complex> in = state.amplitudes();
  std::vector<Complex> out(in.size());
  std::vector<Complex> gathered(k);
  for (std::size_t base = 0; base < in.size(); ++base) {
    if (base & target_mask) continue;
    for (std::size_t g = 0; g < k; ++g) gathered[g] = in[base | offsets[g]];
    for (std::size_t r = 0; r < k; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < k; ++c) acc += op(r, c) * gathered[c];
      out[base | offsets[r]] = acc;
    }
  }
  return StateVector(state.labels(), std::move(out));
}

StateVector apply_gate(const StateVector& state, const DenseOperator& gate,
                       const std::vector<Label>& targets) {
  if (!gate.is_unitary()) {
    throw InvariantError("apply_gate requires a unitary operator");
  }
  return apply_operator(state, gate, targets);
}

Complex inner(const StateVector& s1, const StateVector& s2) {
  if (s1.labels() != s2.labels()) {
    throw LabelError("inner product needs identical label lists");
  }
  Complex acc{};
  for (std::size_t i = 0; i < s1.dim(); ++i) acc += std::conj(s1[i]) * s2[i];
  return acc;
}

Normalized normalize(const StateVector& state) {
  double n = state.norm();
  if (n < kEpsZero) {
    throw ZeroNormError("cannot normalize a state with norm below tolerance");
  }
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (Complex& a : amps) a /= n;
  return {StateVector(state.labels(), std::move(amps)), n};
}

StateVector partial_inner(const StateVector& bra, const StateVector& state) {
  std::vector<std::size_t> bra_shifts = target_shifts(state, bra.labels());
  std::vector<Label> rest_labels;
  std::vector<std::size_t> rest_shifts;
  for (std::size_t p = 0; p < state.num_qubits(); ++p) {
    const Label& l = state.labels()[p];
    if (!bra.has_label(l)) {
      rest_labels.push_back(l);
      rest_shifts.push_back(bit_shift(state.num_qubits(), p));
    }
  }
  std::size_t rest_dim = std::size_t{1} << rest_labels.size();
  std::vector<std::size_t> bra_offsets(bra.dim());
  for (std::size_t b = 0; b < bra.dim(); ++b) bra_offsets[b] = scatter(b, bra_shifts);

  std::vector<Complex> out(rest_dim);
  for (std::size_t r = 0; r < rest_dim; ++r) {
    std::size_t base = scatter(r, rest_shifts);
    Complex acc{};
    for (std::size_t b = 0; b < bra.dim(); ++b) {
      if (bra[b] == Complex{}) continue;
      acc += std::conj(bra[b]) * state[base | bra_offsets[b]];
    }
    out[r] = acc;
  }
  return StateVector(std::move(rest_labels), std::move(out));
}

StateVector permuted(const StateVector& state, const std::vector<Label>& order) {
  if (order.size() != state.num_qubits()) {
    throw LabelError("permutation must name every qubit exactly once");
  }
  std::vector<std::size_t> shifts = target_shifts(state, order);
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) out[i] = state[scatter(i, shifts)];
  return StateVector(order, std::move(out));
}

BlochAngles bloch_angles(const StateVector& state) {
  if (state.num_qubits() != 1) {
    throw LabelError("bloch_angles needs exactly one qubit");
  }
  if (std::abs(state.norm() - 1.0) > kEpsNorm) {
    throw InvariantError("bloch_angles needs a unit-norm state");
  }
  double mag0 = std::abs(state[0]);
  double mag1 = std::abs(state[1]);
  double theta = 2.0 * std::atan2(mag1, mag0);
  double phi = 0.0;
  if (mag0 > kEpsZero && mag1 > kEpsZero) {
    phi = std::arg(state[1]) - std::arg(state[0]);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
  }
  return {theta, phi};
}

StateVector from_bloch_angles(const BlochAngles& angles, Label label) {
  return StateVector({std::move(label)},
                     {Complex(std::cos(angles.theta / 2.0), 0.0),
                      std::polar(std::sin(angles.theta / 2.0), angles.phi)});
}

}  // namespace qtele
