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

#include <stdexcept>
#include <string>

namespace xisim {

// A nonlinear gate was applied to a state outside its defined domain, e.g. a
// subspace pair whose (payload, marker) content is itself a superposition.
class GateDomainError : public std::runtime_error {
 public:
  explicit GateDomainError(const std::string& what) : std::runtime_error(what) {}
};

// A locality check was requested for a gate that cannot act on one side of
// the bipartition alone. The Xi gate is always rejected this way: it is a
// joint gate on all qubits.
class NotLocallyApplicable : public std::runtime_error {
 public:
  explicit NotLocallyApplicable(const std::string& what) : std::runtime_error(what) {}
};

// A counter-mode pair sum does not fit in the counter register.
class CounterOverflowError : public std::runtime_error {
 public:
  explicit CounterOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (oracle, model, distribution or circuit).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xisim
