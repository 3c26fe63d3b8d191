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

#include "xisim/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace xisim {

namespace {

void prune(SparseState::TermMap& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) < kAmplitudePruneTol) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

double norm_squared_of(const SparseState::TermMap& terms) {
  double s = 0.0;
  for (const auto& [label, amp] : terms) {
    s += std::norm(amp);
  }
  return s;
}

void check_labels(int qubit_count, const SparseState::TermMap& terms) {
  for (const auto& [label, amp] : terms) {
    if (label.width() != qubit_count) {
      throw std::invalid_argument("basis label width does not match qubit count");
    }
  }
}

// Distinct, in-range target indices.
void check_targets(int qubit_count, const std::vector<int>& targets) {
  if (targets.empty()) {
    throw std::invalid_argument("target set must not be empty");
  }
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= qubit_count) {
      throw std::out_of_range("target qubit index out of range");
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument("duplicate target qubit index");
    }
  }
}

}  // namespace

SparseState SparseState::basis_state(int qubit_count, const BasisLabel& label) {
  if (label.width() != qubit_count) {
    throw std::invalid_argument("basis label width does not match qubit count");
  }
  TermMap terms;
  terms[label] = Complex{1.0, 0.0};
  return SparseState(qubit_count, std::move(terms));
}

SparseState SparseState::basis_state(const std::string& bits) {
  auto label = BasisLabel::from_string(bits);
  return basis_state(label.width(), label);
}

SparseState SparseState::from_terms(int qubit_count, TermMap terms) {
  check_labels(qubit_count, terms);
  prune(terms);
  const double n2 = norm_squared_of(terms);
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalized");
  }
  return SparseState(qubit_count, std::move(terms));
}

SparseState SparseState::from_terms_normalized(int qubit_count, TermMap terms) {
  check_labels(qubit_count, terms);
  prune(terms);
  const double n2 = norm_squared_of(terms);
  if (n2 <= 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& [label, amp] : terms) {
    amp *= inv;
  }
  return SparseState(qubit_count, std::move(terms));
}

Complex SparseState::amplitude(const BasisLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double SparseState::norm_squared() const { return norm_squared_of(terms_); }

double SparseState::max_amplitude_diff(const SparseState& other) const {
  if (qubit_count_ != other.qubit_count_) {
    throw std::invalid_argument("states have different qubit counts");
  }
  double m = 0.0;
  for (const auto& [label, amp] : terms_) {
    m = std::max(m, std::abs(amp - other.amplitude(label)));
  }
  for (const auto& [label, amp] : other.terms_) {
    m = std::max(m, std::abs(amp - amplitude(label)));
  }
  return m;
}

bool SparseState::approx_equal(const SparseState& other, double tol) const {
  return max_amplitude_diff(other) <= tol;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
}

void DensityMatrix::validate() const {
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace().real() - 1.0) > kNormTol ||
      std::abs(entries_.trace().imag()) > kNormTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPsdSlack) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

SparseState apply_unitary(const SparseState& state, const Eigen::MatrixXcd& gate,
                          const std::vector<int>& targets) {
  check_targets(state.qubit_count(), targets);
  const auto k = targets.size();
  if (k > 20) {
    throw std::invalid_argument("too many target qubits for an explicit gate matrix");
  }
  const auto dim = std::size_t{1} << k;
  if (gate.rows() != static_cast<Eigen::Index>(dim) || gate.cols() != static_cast<Eigen::Index>(dim)) {
    throw std::invalid_argument("gate dimension does not match target count");
  }
  const Eigen::MatrixXcd gram = gate.adjoint() * gate;
  if ((gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("gate matrix is not unitary");
  }

  SparseState::TermMap out;
  for (const auto& [label, amp] : state.terms()) {
    // Column index of this term in the gate's target space.
    std::uint64_t col = 0;
    for (int t : targets) {
      col = (col << 1) | static_cast<std::uint64_t>(label.bit(t));
    }
    for (std::uint64_t row = 0; row < dim; ++row) {
      const Complex g = gate(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
      if (g == Complex{0.0, 0.0}) continue;
      BasisLabel dst = label;
      for (std::size_t i = 0; i < k; ++i) {
        dst = dst.with_bit(targets[i], static_cast<int>((row >> (k - 1 - i)) & 1u));
      }
      out[dst] += g * amp;
    }
  }
  return SparseState::from_terms(state.qubit_count(), std::move(out));
}

DensityMatrix reduced_density(const SparseState& state, const std::vector<int>& keep) {
  check_targets(state.qubit_count(), keep);
  if (keep.size() > 16) {
    throw std::invalid_argument("kept register too large for an explicit density matrix");
  }
  const auto dim = std::size_t{1} << keep.size();

  // Group amplitudes by the traced-out label content, then accumulate the
  // outer product of each group's kept-register vector.
  std::set<int> keep_set(keep.begin(), keep.end());
  std::map<BasisLabel, std::vector<std::pair<std::uint64_t, Complex>>> groups;
  for (const auto& [label, amp] : state.terms()) {
    BasisLabel rest = label;
    std::uint64_t kept = 0;
    for (int q : keep) {
      kept = (kept << 1) | static_cast<std::uint64_t>(label.bit(q));
    }
    for (int q : keep_set) {
      rest = rest.with_bit(q, 0);
    }
    groups[rest].emplace_back(kept, amp);
  }

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
  for (const auto& [rest, entries] : groups) {
    for (const auto& [i, a] : entries) {
      for (const auto& [j, b] : entries) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += a * std::conj(b);
      }
    }
  }
  return DensityMatrix(std::move(rho));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("density matrix dimension mismatch");
  }
  rho.validate();
  sigma.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries() - sigma.entries(),
                                                         Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

JointDistribution measurement_distribution(const SparseState& state,
                                           const std::vector<int>& targets) {
  check_targets(state.qubit_count(), targets);
  std::vector<Variable> vars;
  vars.reserve(targets.size());
  for (int t : targets) {
    vars.push_back(Variable{"q" + std::to_string(t), 2});
  }
  auto out = JointDistribution::zeros(std::move(vars));
  std::vector<int> assignment(targets.size());
  for (const auto& [label, amp] : state.terms()) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      assignment[i] = label.bit(targets[i]);
    }
    out.at(assignment) += std::norm(amp);
  }
  return out;
}

SparseState bell_pair_state(int qubit_count, int qa, int qb) {
  if (qa == qb) {
    throw std::invalid_argument("Bell pair qubits must differ");
  }
  check_targets(qubit_count, {qa, qb});
  const double amp = 1.0 / std::sqrt(2.0);
  SparseState::TermMap terms;
  const auto zero = BasisLabel::zeros(qubit_count);
  terms[zero] = amp;
  terms[zero.with_bit(qa, 1).with_bit(qb, 1)] = amp;
  return SparseState::from_terms(qubit_count, std::move(terms));
}

namespace gates {

Eigen::MatrixXcd identity() { return Eigen::MatrixXcd::Identity(2, 2); }

Eigen::MatrixXcd pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Eigen::MatrixXcd pauli_y() {
  Eigen::MatrixXcd m(2, 2);
  m << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0};
  return m;
}

Eigen::MatrixXcd pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Eigen::MatrixXcd hadamard() {
  Eigen::MatrixXcd m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Eigen::MatrixXcd ry(double theta) {
  Eigen::MatrixXcd m(2, 2);
  m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

}  // namespace gates

}  // namespace xisim
