// Copyright 2026 The qcomb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOMB_LAYOUT_HPP
#define QCOMB_LAYOUT_HPP

#include <vector>

#include "qcomb/types.hpp"

namespace qcomb {

// Wires of an N-tooth sequential network. Labels are exactly 0..2N-1; even
// labels are inputs, odd labels are outputs. Operators on the full wire space
// are stored with factors ordered by ascending label, the lowest label being
// the most significant kron factor.
class WireLayout {
 public:
  explicit WireLayout(std::vector<int> dims);

  int num_wires() const { return static_cast<int>(dims_.size()); }
  int num_teeth() const { return num_wires() / 2; }
  int dim(int label) const { return dims_[static_cast<std::size_t>(label)]; }
  const std::vector<int>& dims() const { return dims_; }

  Index total_dim() const;
  Index input_dim() const;   // product of even-wire dims
  Index output_dim() const;  // product of odd-wire dims

  SystemDims system_dims() const { return SystemDims(dims_); }

  bool operator==(const WireLayout& other) const = default;

 private:
  std::vector<int> dims_;  // dims_[label]
};

}  // namespace qcomb

#endif  // QCOMB_LAYOUT_HPP
