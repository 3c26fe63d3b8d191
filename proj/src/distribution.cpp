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

#include "xisim/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace xisim {

namespace {

std::size_t table_size(const std::vector<Variable>& vars) {
  std::size_t n = 1;
  for (const auto& v : vars) {
    if (v.cardinality < 1) {
      throw std::invalid_argument("variable cardinality must be >= 1");
    }
    n *= static_cast<std::size_t>(v.cardinality);
  }
  return n;
}

void check_unique_names(const std::vector<Variable>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v.name).second) {
      throw std::invalid_argument("duplicate variable name: " + v.name);
    }
  }
}

}  // namespace

JointDistribution::JointDistribution(std::vector<Variable> variables,
                                     std::vector<double> probabilities,
                                     std::vector<std::string> inputs)
    : variables_(std::move(variables)),
      probabilities_(std::move(probabilities)),
      inputs_(std::move(inputs)) {
  check_unique_names(variables_);
  if (probabilities_.size() != table_size(variables_)) {
    throw std::invalid_argument("probability table size mismatch");
  }
  for (const auto& name : inputs_) {
    variable_index(name);  // throws on unknown
  }
}

JointDistribution JointDistribution::zeros(std::vector<Variable> variables,
                                           std::vector<std::string> inputs) {
  auto n = table_size(variables);
  return JointDistribution(std::move(variables), std::vector<double>(n, 0.0), std::move(inputs));
}

int JointDistribution::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown variable: " + name);
}

bool JointDistribution::is_input(const std::string& name) const {
  return std::find(inputs_.begin(), inputs_.end(), name) != inputs_.end();
}

std::size_t JointDistribution::index_of(const std::vector<int>& assignment) const {
  if (assignment.size() != variables_.size()) {
    throw std::invalid_argument("assignment length mismatch");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const int v = assignment[i];
    if (v < 0 || v >= variables_[i].cardinality) {
      throw std::out_of_range("assignment value out of range");
    }
    idx = idx * static_cast<std::size_t>(variables_[i].cardinality) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<int> JointDistribution::assignment_of(std::size_t index) const {
  std::vector<int> out(variables_.size());
  for (std::size_t i = variables_.size(); i-- > 0;) {
    const auto card = static_cast<std::size_t>(variables_[i].cardinality);
    out[i] = static_cast<int>(index % card);
    index /= card;
  }
  return out;
}

double JointDistribution::prob(const std::vector<int>& assignment) const {
  return probabilities_[index_of(assignment)];
}

double& JointDistribution::at(const std::vector<int>& assignment) {
  return probabilities_[index_of(assignment)];
}

double JointDistribution::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

void JointDistribution::validate(double tol) const {
  for (double p : probabilities_) {
    if (p < -tol || !std::isfinite(p)) {
      throw std::invalid_argument("negative or non-finite probability entry");
    }
  }
  if (std::abs(total() - 1.0) > tol) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }
}

JointDistribution JointDistribution::marginal(const std::vector<std::string>& keep) const {
  std::vector<Variable> vars;
  std::vector<int> positions;
  vars.reserve(keep.size());
  for (const auto& name : keep) {
    const int idx = variable_index(name);
    vars.push_back(variables_[static_cast<std::size_t>(idx)]);
    positions.push_back(idx);
  }
  std::vector<std::string> kept_inputs;
  for (const auto& name : inputs_) {
    if (std::find(keep.begin(), keep.end(), name) != keep.end()) {
      kept_inputs.push_back(name);
    }
  }
  auto out = JointDistribution::zeros(vars, kept_inputs);
  std::vector<int> sub(positions.size());
  for (std::size_t idx = 0; idx < probabilities_.size(); ++idx) {
    const auto full = assignment_of(idx);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      sub[i] = full[static_cast<std::size_t>(positions[i])];
    }
    out.at(sub) += probabilities_[idx];
  }
  return out;
}

void JointDistribution::require_same_shape(const JointDistribution& other) const {
  if (variables_ != other.variables_) {
    throw std::invalid_argument("distributions are over different variables");
  }
}

double JointDistribution::max_abs_diff(const JointDistribution& other) const {
  require_same_shape(other);
  double m = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    m = std::max(m, std::abs(probabilities_[i] - other.probabilities_[i]));
  }
  return m;
}

double JointDistribution::total_variation(const JointDistribution& other) const {
  require_same_shape(other);
  double s = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    s += std::abs(probabilities_[i] - other.probabilities_[i]);
  }
  return 0.5 * s;
}

}  // namespace xisim
