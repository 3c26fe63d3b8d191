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

#include <optional>
#include <variant>
#include <vector>

#include "xisim/errors.hpp"
#include "xisim/state.hpp"

namespace xisim {

// Operating mode of the nonlinear Xi gate.
//
// Marker: register C is a single qubit holding a marker bit; marked branches
// spread across subspace pairs. Counter: register C holds an integer (first
// C qubit most significant); pair counters are summed, which turns the same
// sweep into exact solution counting.
enum class XiMode { Marker, Counter };

// One subspace pair of the Xi decomposition: the two branches that share the
// values of every register-A qubit except the active one. Each side is a
// single basis term over (B, C) or absent.
struct BranchPair {
  struct Side {
    std::uint64_t payload = 0;  // register-B label value
    std::uint64_t count = 0;    // register-C value (marker bit or counter)
    Complex amplitude;
  };

  BasisLabel subspace_label;  // full A register with the active qubit cleared
  std::optional<Side> branch0;
  std::optional<Side> branch1;
};

// Decomposes a state into subspace pairs for the given active qubit.
// Throws GateDomainError if any side holds a superposition over (B, C).
std::vector<BranchPair> decompose_pairs(const SparseState& state, const RegisterLayout& layout,
                                        int active_qubit);

// The nonlinear gate Xi, applied with one active register-A qubit.
//
// Marker mode rewrites (payload, marker) labels per pair: a (0,1) marker pair
// copies branch 1's payload and marker onto branch 0; a (1,0) pair copies
// branch 0's; (0,0) and (1,1) pairs are left unchanged, as are pairs with an
// absent side. Counter mode writes the sum of the two counters to both sides
// and leaves payloads alone. Amplitudes are never altered, only labels are
// rewritten, so the norm is preserved exactly.
SparseState apply_xi(const SparseState& state, const RegisterLayout& layout, int active_qubit,
                     XiMode mode);

// Single-qubit Weinberg gate, defined only on its demo domain: computational
// basis states are fixed points, and a Bell-type pair
// (|0..0> + |1..1 on {qubit, partner}>)/sqrt(2) collapses to the branch with
// the target qubit at 0. Everything else raises GateDomainError.
SparseState apply_weinberg_local(const SparseState& state, int qubit);

// Local actions used by the signaling analysis.
struct UnitaryAction {
  Eigen::MatrixXcd matrix;
  std::vector<int> targets;
};

struct WeinbergAction {
  int qubit = 0;
};

struct XiAction {
  RegisterLayout layout;
  int active_qubit = 0;
  XiMode mode = XiMode::Marker;
};

using GateAction = std::variant<UnitaryAction, WeinbergAction, XiAction>;

// Qubits the action touches. The Xi gate touches every qubit: it is a joint
// gate on the whole register.
std::vector<int> action_support(const GateAction& action, int qubit_count);

SparseState apply_action(const SparseState& state, const GateAction& action);

// Trace distance between Bob's reduced state with and without Alice's action.
// Strictly positive output certifies signaling.
double signaling_advantage(const SparseState& shared_state, const std::vector<int>& alice_qubits,
                           const std::vector<int>& bob_qubits, const GateAction& alice_action);

struct NoSignalingReport {
  bool signals = false;
  double max_distance = 0.0;
  std::optional<SparseState> witness;
  std::string witness_description;
  int probes_checked = 0;
  int probes_skipped = 0;  // probes outside a nonlinear gate's domain
};

// Searches a family of probe states (every computational-basis state plus
// Bell pairs across the cut) for one whose T-side marginal changes under the
// gate. S and T together must cover the register. Throws NotLocallyApplicable
// when the gate cannot act on S alone; requesting Xi across any cut always
// does, since its action needs all qubits interacting locally.
NoSignalingReport no_signaling_check(const GateAction& gate, const std::vector<int>& s_qubits,
                                     const std::vector<int>& t_qubits, double tol = kNormTol);

}  // namespace xisim
