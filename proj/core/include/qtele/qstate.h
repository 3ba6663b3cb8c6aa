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

#ifndef QTELE_QSTATE_H_
#define QTELE_QSTATE_H_

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qtele {

using Complex = std::complex<double>;
using Label = std::string;

inline constexpr std::size_t kMaxQubits = 8;

// Dense amplitude vector over an ordered list of labeled qubits.
//
// Index convention: the first label is the most significant bit of the
// amplitude index, so the ket |q1 q2 ... qn> reads left to right. A
// StateVector is not required to be normalized; normalize() produces one
// that is.
class StateVector {
 public:
  // Throws LabelError on duplicate labels, more than kMaxQubits qubits, or an
  // amplitude count that is not 2^labels.size().
  StateVector(std::vector<Label> labels, std::vector<Complex> amplitudes);

  // Computational basis ket |index> over `labels`.
  static StateVector basis(std::vector<Label> labels, std::size_t index);

  const std::vector<Label>& labels() const { return labels_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dim() const { return amplitudes_.size(); }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  // Amplitude of a basis ket written as a bit string, e.g. "011001".
  Complex amplitude(std::string_view bits) const;

  // Position of `label` in labels(); throws LabelError when absent.
  std::size_t position(const Label& label) const;
  bool has_label(const Label& label) const;

  double norm() const;

  // Same amplitudes under new names.
  StateVector relabeled(std::vector<Label> labels) const;

 private:
  std::vector<Label> labels_;
  std::vector<Complex> amplitudes_;
};

// Square matrix acting on `arity` qubits, stored row-major.
class DenseOperator {
 public:
  // Checks U^dagger U = I within kEpsNorm; throws InvariantError otherwise.
  static DenseOperator unitary(std::size_t arity, std::vector<Complex> entries);
  static DenseOperator general(std::size_t arity, std::vector<Complex> entries);
  static DenseOperator identity(std::size_t arity);
  // |s><s| for a (not necessarily normalized) state.
  static DenseOperator outer(const StateVector& ket, const StateVector& bra);
  static DenseOperator projector(const StateVector& state) { return outer(state, state); }
  static DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  bool is_unitary() const { return unitary_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const { return entries_; }

  DenseOperator adjoint() const;
  bool is_hermitian(double tol) const;

  // Largest elementwise |a - b|.
  static double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(Complex scale, const DenseOperator& a);

 private:
  DenseOperator(std::size_t arity, std::vector<Complex> entries, bool unitary);

  std::size_t arity_;
  std::size_t dim_;
  std::vector<Complex> entries_;
  bool unitary_;
};

struct BlochAngles {
  double theta;  // [0, pi]
  double phi;    // [0, 2 pi)
};

struct Normalized {
  StateVector state;
  double norm;
};

// Kronecker product, s1's labels first. Throws LabelError on shared labels.
StateVector tensor(const StateVector& s1, const StateVector& s2);

// Applies a unitary to `targets` (first target = most significant gate
// index). Throws LabelError for unknown labels or arity mismatch and
// InvariantError when the operator is not flagged unitary.
StateVector apply_gate(const StateVector& state, const DenseOperator& gate,
                       const std::vector<Label>& targets);

// Same as apply_gate without the unitarity requirement (projectors, Kraus
// operators).
StateVector apply_operator(const StateVector& state, const DenseOperator& op,
                           const std::vector<Label>& targets);

// <s1|s2>, conjugating s1. Label lists must match exactly.
Complex inner(const StateVector& s1, const StateVector& s2);

// Throws ZeroNormError when the norm is below kEpsZero.
Normalized normalize(const StateVector& state);

// Contracts `bra` against the matching qubits of `state`: returns the
// unnormalized state <bra|_{bra labels} |state> on the remaining labels, in
// the order they appear in `state`.
StateVector partial_inner(const StateVector& bra, const StateVector& state);

// Reorders the qubits of `state` to follow `order`, which must be a
// permutation of state.labels().
StateVector permuted(const StateVector& state, const std::vector<Label>& order);

// Bloch-sphere angles of a normalized single-qubit state, up to global
// phase. Throws LabelError on wrong arity, InvariantError on non-unit norm.
BlochAngles bloch_angles(const StateVector& state);
StateVector from_bloch_angles(const BlochAngles& angles, Label label);

}  // namespace qtele

#endif  // QTELE_QSTATE_H_
