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

#ifndef QCOMB_TYPES_HPP
#define QCOMB_TYPES_HPP

#include <complex>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcomb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default tolerances. rank_eps is the relative eigenvalue threshold that
// decides numerical rank (lambda is kept iff lambda > rank_eps * lambda_max);
// it is deliberately configurable everywhere a support/rank decision is made.
inline constexpr double default_verify_tol = 1e-8;
inline constexpr double default_rank_eps = 1e-10;
inline constexpr double default_roundtrip_tol = 1e-8;
inline constexpr double default_herm_tol = 1e-10;
inline constexpr double default_unitary_tol = 1e-10;

// Base error type; subclasses let callers map failures onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or tensor-factor bookkeeping mismatch (bad dims, bad permutation,
// bad wire count).
struct DimensionError : Error {
  using Error::Error;
};

// Input violates a numerical precondition (non-Hermitian, non-unitary,
// negative eigenvalue beyond tolerance, non-PSD state).
struct NumericalError : Error {
  using Error::Error;
};

// A comb-level validation failed (normalization, covariance).
struct ValidationError : Error {
  using Error::Error;
};

// Malformed file or JSON schema violation.
struct FormatError : Error {
  using Error::Error;
};

// Ordered dimensions of the tensor factors of an operator. The first factor
// is the most significant one in the row/column index, matching kron().
class SystemDims {
 public:
  SystemDims() = default;
  SystemDims(std::initializer_list<int> dims) : dims_(dims) { validate(); }
  explicit SystemDims(std::vector<int> dims) : dims_(std::move(dims)) {
    validate();
  }

  int size() const { return static_cast<int>(dims_.size()); }
  int operator[](int i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& dims() const { return dims_; }

  Index total() const {
    Index t = 1;
    for (int d : dims_) t *= d;
    return t;
  }

  bool operator==(const SystemDims& other) const = default;

 private:
  void validate() const {
    for (int d : dims_) {
      if (d < 1) throw DimensionError("SystemDims: factor dimensions must be positive");
    }
  }

  std::vector<int> dims_;
};

}  // namespace qcomb

#endif  // QCOMB_TYPES_HPP
