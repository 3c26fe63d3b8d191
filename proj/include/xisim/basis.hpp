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

#include <compare>
#include <cstdint>
#include <string>

namespace xisim {

// Computational-basis label of a fixed-width qubit register.
//
// Qubit 0 is the leftmost position of the rendered bit string and the most
// significant bit of the integer value. All integer/bit-string conversions in
// the project follow this convention.
class BasisLabel {
 public:
  BasisLabel() = default;
  BasisLabel(int width, std::uint64_t value);

  static BasisLabel zeros(int width) { return BasisLabel(width, 0); }
  static BasisLabel from_string(const std::string& bits);

  int width() const { return width_; }
  std::uint64_t value() const { return bits_; }

  int bit(int qubit) const;
  BasisLabel with_bit(int qubit, int value) const;

  // Qubits [first, first + count) read as an integer, qubit `first` most
  // significant.
  std::uint64_t slice_value(int first, int count) const;
  BasisLabel with_slice(int first, int count, std::uint64_t value) const;

  std::string str() const;

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;  // qubit i stored at bit position width_-1-i
};

}  // namespace xisim
