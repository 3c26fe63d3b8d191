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

#include "xisim/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace xisim {

namespace {

void check_layout(const SparseState& state, const RegisterLayout& layout, int active_qubit) {
  if (layout.a_width < 1 || layout.c_width < 1 || layout.b_width < 0) {
    throw std::invalid_argument("register layout widths out of range");
  }
  if (layout.total() != state.qubit_count()) {
    throw std::invalid_argument("register layout does not match the state's qubit count");
  }
  if (active_qubit < 0 || active_qubit >= layout.a_width) {
    throw std::out_of_range("active qubit must lie in register A");
  }
}

void check_mode(const RegisterLayout& layout, XiMode mode) {
  if (mode == XiMode::Marker && layout.c_width != 1) {
    throw std::invalid_argument("marker mode requires a one-qubit C register");
  }
}

}  // namespace

std::vector<BranchPair> decompose_pairs(const SparseState& state, const RegisterLayout& layout,
                                        int active_qubit) {
  check_layout(state, layout, active_qubit);

  std::map<BasisLabel, BranchPair> pairs;
  for (const auto& [label, amp] : state.terms()) {
    const int active_value = label.bit(active_qubit);
    const BasisLabel subspace =
        label.with_bit(active_qubit, 0).with_slice(layout.b_begin(), layout.b_width + layout.c_width, 0);

    auto [it, inserted] = pairs.try_emplace(subspace);
    if (inserted) {
      it->second.subspace_label = BasisLabel(layout.a_width, subspace.slice_value(0, layout.a_width));
    }
    auto& side = active_value == 0 ? it->second.branch0 : it->second.branch1;
    if (side.has_value()) {
      throw GateDomainError("subspace pair side holds a superposition over (B, C)");
    }
    side = BranchPair::Side{label.slice_value(layout.b_begin(), layout.b_width),
                            label.slice_value(layout.c_begin(), layout.c_width), amp};
  }

  std::vector<BranchPair> out;
  out.reserve(pairs.size());
  for (auto& [key, pair] : pairs) {
    out.push_back(std::move(pair));
  }
  return out;
}

SparseState apply_xi(const SparseState& state, const RegisterLayout& layout, int active_qubit,
                     XiMode mode) {
  check_layout(state, layout, active_qubit);
  check_mode(layout, mode);

  const auto pairs = decompose_pairs(state, layout, active_qubit);

  SparseState::TermMap out;
  auto emit = [&](const BranchPair& pair, int active_value, std::uint64_t payload,
                  std::uint64_t count, Complex amp) {
    BasisLabel label(state.qubit_count(), 0);
    label = label.with_slice(0, layout.a_width, pair.subspace_label.value());
    label = label.with_bit(active_qubit, active_value);
    label = label.with_slice(layout.b_begin(), layout.b_width, payload);
    label = label.with_slice(layout.c_begin(), layout.c_width, count);
    out[label] += amp;
  };

  for (const auto& pair : pairs) {
    const auto& b0 = pair.branch0;
    const auto& b1 = pair.branch1;

    if (mode == XiMode::Marker) {
      // Pairs with both sides present follow the gate's three defined lines;
      // the (1,1) case and one-sided pairs pass through unchanged.
      if (b0 && b1 && b0->count == 0 && b1->count == 1) {
        emit(pair, 0, b1->payload, 1, b0->amplitude);
        emit(pair, 1, b1->payload, 1, b1->amplitude);
      } else if (b0 && b1 && b0->count == 1 && b1->count == 0) {
        emit(pair, 0, b0->payload, 1, b0->amplitude);
        emit(pair, 1, b0->payload, 1, b1->amplitude);
      } else {
        if (b0) emit(pair, 0, b0->payload, b0->count, b0->amplitude);
        if (b1) emit(pair, 1, b1->payload, b1->count, b1->amplitude);
      }
    } else {
      if (b0 && b1) {
        const std::uint64_t sum = b0->count + b1->count;
        const std::uint64_t limit = layout.c_width >= 64
                                        ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << layout.c_width) - 1;
        if (sum > limit) {
          throw CounterOverflowError("pair counter sum does not fit in the C register");
        }
        emit(pair, 0, b0->payload, sum, b0->amplitude);
        emit(pair, 1, b1->payload, sum, b1->amplitude);
      } else {
        if (b0) emit(pair, 0, b0->payload, b0->count, b0->amplitude);
        if (b1) emit(pair, 1, b1->payload, b1->count, b1->amplitude);
      }
    }
  }
  return SparseState::from_terms(state.qubit_count(), std::move(out));
}

SparseState apply_weinberg_local(const SparseState& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw std::out_of_range("qubit index out of range");
  }

  if (state.term_count() == 1) {
    return state;  // basis states are fixed points
  }

  if (state.term_count() == 2) {
    const auto& terms = state.terms();
    auto it = terms.begin();
    const auto& [label0, amp0] = *it;
    ++it;
    const auto& [label1, amp1] = *it;

    // Qubits on which the two branches disagree.
    std::vector<int> diff;
    for (int q = 0; q < state.qubit_count(); ++q) {
      if (label0.bit(q) != label1.bit(q)) diff.push_back(q);
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const bool bell_amplitudes = std::abs(amp0 - Complex{inv_sqrt2, 0.0}) <= kNormTol &&
                                 std::abs(amp1 - Complex{inv_sqrt2, 0.0}) <= kNormTol;
    const bool pair_includes_qubit =
        diff.size() == 2 && std::find(diff.begin(), diff.end(), qubit) != diff.end();
    if (bell_amplitudes && pair_includes_qubit) {
      const bool zero_branch_first = label0.bit(diff[0]) == 0 && label0.bit(diff[1]) == 0;
      const bool one_branch_second = label1.bit(diff[0]) == 1 && label1.bit(diff[1]) == 1;
      if (zero_branch_first && one_branch_second) {
        return SparseState::basis_state(state.qubit_count(), label0);
      }
    }
  }

  throw GateDomainError("Weinberg gate is undefined on this state");
}

std::vector<int> action_support(const GateAction& action, int qubit_count) {
  if (const auto* u = std::get_if<UnitaryAction>(&action)) {
    return u->targets;
  }
  if (const auto* w = std::get_if<WeinbergAction>(&action)) {
    return {w->qubit};
  }
  std::vector<int> all(static_cast<std::size_t>(qubit_count));
  for (int q = 0; q < qubit_count; ++q) all[static_cast<std::size_t>(q)] = q;
  return all;
}

SparseState apply_action(const SparseState& state, const GateAction& action) {
  if (const auto* u = std::get_if<UnitaryAction>(&action)) {
    return apply_unitary(state, u->matrix, u->targets);
  }
  if (const auto* w = std::get_if<WeinbergAction>(&action)) {
    return apply_weinberg_local(state, w->qubit);
  }
  const auto& xi = std::get<XiAction>(action);
  return apply_xi(state, xi.layout, xi.active_qubit, xi.mode);
}

double signaling_advantage(const SparseState& shared_state, const std::vector<int>& alice_qubits,
                           const std::vector<int>& bob_qubits, const GateAction& alice_action) {
  std::set<int> alice(alice_qubits.begin(), alice_qubits.end());
  for (int q : bob_qubits) {
    if (alice.count(q) > 0) {
      throw std::invalid_argument("Alice and Bob qubit sets overlap");
    }
  }
  for (int q : action_support(alice_action, shared_state.qubit_count())) {
    if (alice.count(q) == 0) {
      throw std::invalid_argument("Alice's action touches a qubit outside her set");
    }
  }

  const auto before = reduced_density(shared_state, bob_qubits);
  const auto after = reduced_density(apply_action(shared_state, alice_action), bob_qubits);
  return trace_distance(before, after);
}

NoSignalingReport no_signaling_check(const GateAction& gate, const std::vector<int>& s_qubits,
                                     const std::vector<int>& t_qubits, double tol) {
  std::set<int> s(s_qubits.begin(), s_qubits.end());
  std::set<int> t(t_qubits.begin(), t_qubits.end());
  if (s.empty() || t.empty()) {
    throw std::invalid_argument("both sides of the bipartition must be nonempty");
  }
  for (int q : t_qubits) {
    if (s.count(q) > 0) {
      throw std::invalid_argument("bipartition sides overlap");
    }
  }
  const int qubit_count = static_cast<int>(s.size() + t.size());
  {
    std::set<int> all;
    all.insert(s.begin(), s.end());
    all.insert(t.begin(), t.end());
    if (static_cast<int>(all.size()) != qubit_count || *all.begin() != 0 ||
        *all.rbegin() != qubit_count - 1) {
      throw std::invalid_argument("bipartition must cover qubits 0..n-1");
    }
  }

  if (std::holds_alternative<XiAction>(gate)) {
    throw NotLocallyApplicable(
        "the Xi gate is a joint gate on all qubits and cannot act on one side of a cut");
  }
  for (int q : action_support(gate, qubit_count)) {
    if (s.count(q) == 0) {
      throw NotLocallyApplicable("gate acts outside the S side of the bipartition");
    }
  }

  NoSignalingReport report;
  auto consider = [&](const SparseState& probe, const std::string& description) {
    ++report.probes_checked;
    SparseState acted = probe;
    try {
      acted = apply_action(probe, gate);
    } catch (const GateDomainError&) {
      --report.probes_checked;
      ++report.probes_skipped;
      return;
    }
    const double d =
        trace_distance(reduced_density(probe, t_qubits), reduced_density(acted, t_qubits));
    if (d > report.max_distance) {
      report.max_distance = d;
      report.witness = probe;
      report.witness_description = description;
    }
  };

  for (std::uint64_t v = 0; v < (std::uint64_t{1} << qubit_count); ++v) {
    const BasisLabel label(qubit_count, v);
    consider(SparseState::basis_state(qubit_count, label), "basis |" + label.str() + ">");
  }
  for (int sq : s) {
    for (int tq : t) {
      consider(bell_pair_state(qubit_count, sq, tq),
               "Bell pair on qubits " + std::to_string(sq) + "," + std::to_string(tq));
    }
  }

  report.signals = report.max_distance > tol;
  if (!report.signals) {
    report.witness.reset();
    report.witness_description.clear();
  }
  return report;
}

}  // namespace xisim
