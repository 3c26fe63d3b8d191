// Copyright 2026 The xisim Authors
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

#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "xisim/basis.hpp"
#include "xisim/distribution.hpp"

namespace xisim {

using Complex = std::complex<double>;

// Shared numeric tolerances. Double precision accumulates over at most a few
// thousand sparse terms, so 1e-12 is comfortable for norms and Hermiticity;
// eigenvalues of reduced states get a little extra PSD slack.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kAmplitudePruneTol = 1e-15;
inline constexpr double kPsdSlack = 1e-10;

// Normalized sparse state vector: a map from basis labels to complex
// amplitudes. Immutable value type; all operations return new states.
//
// Invariants: sum |amplitude|^2 = 1 within kNormTol, and no stored amplitude
// has magnitude below kAmplitudePruneTol.
class SparseState {
 public:
  using TermMap = std::map<BasisLabel, Complex>;

  static SparseState basis_state(int qubit_count, const BasisLabel& label);
  static SparseState basis_state(const std::string& bits);

  // Terms must already be normalized within kNormTol.
  static SparseState from_terms(int qubit_count, TermMap terms);

  // Rescales by 1/norm before constructing; rejects the zero vector.
  static SparseState from_terms_normalized(int qubit_count, TermMap terms);

  int qubit_count() const { return qubit_count_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Amplitude of a basis label, zero if not stored.
  Complex amplitude(const BasisLabel& label) const;

  double norm_squared() const;

  // Largest |a - b| over basis labels present in either state.
  double max_amplitude_diff(const SparseState& other) const;
  bool approx_equal(const SparseState& other, double tol = kNormTol) const;

 private:
  SparseState(int qubit_count, TermMap terms) : qubit_count_(qubit_count), terms_(std::move(terms)) {}

  int qubit_count_ = 0;
  TermMap terms_;
};

// Partition of the qubits into registers A (input), B (payload) and
// C (marker or counter), in that order: A occupies qubits [0, a_width),
// B the next b_width qubits, C the last c_width.
struct RegisterLayout {
  int a_width = 0;
  int b_width = 0;
  int c_width = 0;

  int total() const { return a_width + b_width + c_width; }
  int b_begin() const { return a_width; }
  int c_begin() const { return a_width + b_width; }

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

// Density matrix on a 2^k-dimensional register. Hermitian within kNormTol,
// unit trace within kNormTol, positive semidefinite up to kPsdSlack.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  // Throws std::invalid_argument when an invariant fails.
  void validate() const;

 private:
  Eigen::MatrixXcd entries_;
};

// Applies a small unitary to the target qubits. The gate is a 2^k x 2^k
// matrix over the targets read in the order given, first target = most
// significant bit of the gate index.
SparseState apply_unitary(const SparseState& state, const Eigen::MatrixXcd& gate,
                          const std::vector<int>& targets);

// Partial trace onto the `keep` qubits (order given = bit order of the
// result, first = most significant).
DensityMatrix reduced_density(const SparseState& state, const std::vector<int>& keep);

// (1/2) sum |eigenvalues of rho - sigma|. Symmetric, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Computational-basis measurement statistics of the target qubits, as a
// distribution over variables q<i> in target order.
JointDistribution measurement_distribution(const SparseState& state,
                                           const std::vector<int>& targets);

// (|0...0> + |1 at qa and qb>)/sqrt(2) on a register of `qubit_count` qubits.
SparseState bell_pair_state(int qubit_count, int qa, int qb);

namespace gates {

Eigen::MatrixXcd identity();
Eigen::MatrixXcd pauli_x();
Eigen::MatrixXcd pauli_y();
Eigen::MatrixXcd pauli_z();
Eigen::MatrixXcd hadamard();

// Rotation about the Y axis by theta: maps |0> to cos(theta/2)|0> + sin(theta/2)|1>.
Eigen::MatrixXcd ry(double theta);

}  // namespace gates

}  // namespace xisim
