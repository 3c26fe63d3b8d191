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

#include <cstddef>
#include <string>
#include <vector>

namespace xisim {

struct Variable {
  std::string name;
  int cardinality = 2;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Exact discrete distribution over named finite-valued variables.
//
// Stored densely in mixed-radix order, first variable most significant. A
// conditional scenario P(outputs | inputs) is represented as a joint with the
// input variables declared in `inputs()` and given uniform priors; conditional
// queries divide by the input marginal.
class JointDistribution {
 public:
  JointDistribution(std::vector<Variable> variables, std::vector<double> probabilities,
                    std::vector<std::string> inputs = {});

  // All-zero table, to be filled through `at` and validated by the caller.
  static JointDistribution zeros(std::vector<Variable> variables,
                                 std::vector<std::string> inputs = {});

  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  const std::vector<std::string>& inputs() const { return inputs_; }

  std::size_t size() const { return probabilities_.size(); }
  int variable_index(const std::string& name) const;
  bool is_input(const std::string& name) const;

  std::size_t index_of(const std::vector<int>& assignment) const;
  std::vector<int> assignment_of(std::size_t index) const;

  double prob(const std::vector<int>& assignment) const;
  double& at(const std::vector<int>& assignment);

  double total() const;

  // Invariants: entries nonnegative, total within `tol` of 1.
  void validate(double tol = 1e-12) const;

  // Marginal over the named variables, in the order given. Input flags are
  // kept for variables that remain inputs.
  JointDistribution marginal(const std::vector<std::string>& keep) const;

  // Largest |p - q| over assignments; variables must match exactly.
  double max_abs_diff(const JointDistribution& other) const;

  // (1/2) sum |p - q|.
  double total_variation(const JointDistribution& other) const;

 private:
  void require_same_shape(const JointDistribution& other) const;

  std::vector<Variable> variables_;
  std::vector<double> probabilities_;
  std::vector<std::string> inputs_;
};

}  // namespace xisim
