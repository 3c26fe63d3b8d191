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

#include "xisim/basis.hpp"

#include <stdexcept>

namespace xisim {

BasisLabel::BasisLabel(int width, std::uint64_t value) : width_(width), bits_(value) {
  if (width < 0 || width > 63) {
    throw std::invalid_argument("BasisLabel width must be in [0, 63]");
  }
  if (width < 64 && value >= (std::uint64_t{1} << width)) {
    throw std::invalid_argument("BasisLabel value does not fit in width");
  }
}

BasisLabel BasisLabel::from_string(const std::string& bits) {
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BasisLabel string must contain only 0/1");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BasisLabel(static_cast<int>(bits.size()), v);
}

int BasisLabel::bit(int qubit) const {
  if (qubit < 0 || qubit >= width_) {
    throw std::out_of_range("qubit index out of range");
  }
  return static_cast<int>((bits_ >> (width_ - 1 - qubit)) & 1u);
}

BasisLabel BasisLabel::with_bit(int qubit, int value) const {
  if (qubit < 0 || qubit >= width_) {
    throw std::out_of_range("qubit index out of range");
  }
  if (value != 0 && value != 1) {
    throw std::invalid_argument("bit value must be 0 or 1");
  }
  const std::uint64_t mask = std::uint64_t{1} << (width_ - 1 - qubit);
  BasisLabel out = *this;
  out.bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
  return out;
}

std::uint64_t BasisLabel::slice_value(int first, int count) const {
  if (count < 0 || first < 0 || first + count > width_) {
    throw std::out_of_range("slice out of range");
  }
  if (count == 0) return 0;
  const int shift = width_ - first - count;
  const std::uint64_t mask = (count >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
  return (bits_ >> shift) & mask;
}

BasisLabel BasisLabel::with_slice(int first, int count, std::uint64_t value) const {
  if (count < 0 || first < 0 || first + count > width_) {
    throw std::out_of_range("slice out of range");
  }
  const std::uint64_t mask = (count >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
  if (value > mask) {
    throw std::invalid_argument("slice value does not fit");
  }
  const int shift = width_ - first - count;
  BasisLabel out = *this;
  out.bits_ = (bits_ & ~(mask << shift)) | (value << shift);
  return out;
}

std::string BasisLabel::str() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(width_));
  for (int q = 0; q < width_; ++q) {
    s.push_back(static_cast<char>('0' + bit(q)));
  }
  return s;
}

}  // namespace xisim
