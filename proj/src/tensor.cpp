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

#include "qcomb/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace qcomb {

namespace {

// Strides of each factor in the flat index (first factor most significant).
std::vector<Index> factor_strides(const SystemDims& dims) {
  const int n = dims.size();
  std::vector<Index> strides(static_cast<std::size_t>(n), 1);
  for (int f = n - 2; f >= 0; --f)
    strides[static_cast<std::size_t>(f)] =
        strides[static_cast<std::size_t>(f + 1)] * dims[f + 1];
  return strides;
}

void check_square_dims(const ComplexMatrix& M, const SystemDims& dims, const char* op) {
  if (M.rows() != M.cols())
    throw DimensionError(std::string(op) + ": operator must be square");
  if (dims.total() != M.rows())
    throw DimensionError(std::string(op) + ": factor dimensions do not match the matrix");
}

void check_positions(const std::vector<int>& positions, int n, const char* op) {
  std::set<int> seen;
  for (int p : positions) {
    if (p < 0 || p >= n)
      throw DimensionError(std::string(op) + ": factor position out of range");
    if (!seen.insert(p).second)
      throw DimensionError(std::string(op) + ": duplicate factor position");
  }
}

}  // namespace

std::vector<Index> permuted_indices(const SystemDims& dims, const std::vector<int>& perm) {
  const int n = dims.size();
  if (static_cast<int>(perm.size()) != n)
    throw DimensionError("permuted_indices: permutation length does not match factor count");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int q : perm) {
    if (q < 0 || q >= n || hit[static_cast<std::size_t>(q)])
      throw DimensionError("permuted_indices: not a permutation of factor positions");
    hit[static_cast<std::size_t>(q)] = true;
  }

  const std::vector<Index> old_strides = factor_strides(dims);
  std::vector<int> new_dims(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) new_dims[static_cast<std::size_t>(p)] = dims[perm[static_cast<std::size_t>(p)]];

  const Index total = dims.total();
  std::vector<Index> map(static_cast<std::size_t>(total));
  std::vector<Index> digits(static_cast<std::size_t>(n), 0);
  for (Index v = 0; v < total; ++v) {
    Index rem = v, old = 0;
    for (int p = n - 1; p >= 0; --p) {
      digits[static_cast<std::size_t>(p)] = rem % new_dims[static_cast<std::size_t>(p)];
      rem /= new_dims[static_cast<std::size_t>(p)];
    }
    for (int p = 0; p < n; ++p)
      old += digits[static_cast<std::size_t>(p)] *
             old_strides[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
    map[static_cast<std::size_t>(v)] = old;
  }
  return map;
}

ComplexMatrix permute_systems(const ComplexMatrix& M, const SystemDims& dims,
                              const std::vector<int>& perm) {
  check_square_dims(M, dims, "permute_systems");
  const std::vector<Index> map = permuted_indices(dims, perm);
  const Index n = M.rows();
  ComplexMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out(i, j) = M(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& M, const SystemDims& dims,
                            const std::vector<int>& traced) {
  check_square_dims(M, dims, "partial_trace");
  check_positions(traced, dims.size(), "partial_trace");

  const int n = dims.size();
  const std::vector<Index> strides = factor_strides(dims);
  std::vector<int> kept;
  for (int f = 0; f < n; ++f)
    if (std::find(traced.begin(), traced.end(), f) == traced.end()) kept.push_back(f);

  // Flat offsets contributed by the kept and the traced factor groups.
  auto offsets = [&](const std::vector<int>& group) {
    std::vector<Index> offs{0};
    for (int f : group) {
      std::vector<Index> next;
      next.reserve(offs.size() * static_cast<std::size_t>(dims[f]));
      for (Index base : offs)
        for (Index i = 0; i < dims[f]; ++i)
          next.push_back(base + i * strides[static_cast<std::size_t>(f)]);
      offs = std::move(next);
    }
    return offs;
  };
  const std::vector<Index> kept_off = offsets(kept);
  const std::vector<Index> traced_off = offsets(traced);

  const Index dk = static_cast<Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i)
    for (Index j = 0; j < dk; ++j) {
      Complex acc(0.0, 0.0);
      for (Index t : traced_off)
        acc += M(kept_off[static_cast<std::size_t>(i)] + t,
                 kept_off[static_cast<std::size_t>(j)] + t);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& M, const SystemDims& dims,
                                const std::vector<int>& positions) {
  check_square_dims(M, dims, "partial_transpose");
  check_positions(positions, dims.size(), "partial_transpose");

  const int n = dims.size();
  const std::vector<Index> strides = factor_strides(dims);
  const Index total = M.rows();

  // Split every flat index into the transposed-factor part and the rest.
  std::vector<Index> swapped_part(static_cast<std::size_t>(total), 0);
  for (Index v = 0; v < total; ++v) {
    Index rem = v, part = 0;
    for (int f = 0; f < n; ++f) {
      const Index digit = rem / strides[static_cast<std::size_t>(f)];
      rem %= strides[static_cast<std::size_t>(f)];
      if (std::find(positions.begin(), positions.end(), f) != positions.end())
        part += digit * strides[static_cast<std::size_t>(f)];
    }
    swapped_part[static_cast<std::size_t>(v)] = part;
  }

  ComplexMatrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    const Index bi = swapped_part[static_cast<std::size_t>(i)];
    const Index ai = i - bi;
    for (Index j = 0; j < total; ++j) {
      const Index bj = swapped_part[static_cast<std::size_t>(j)];
      const Index aj = j - bj;
      out(ai + bj, aj + bi) = M(i, j);
    }
  }
  return out;
}

ComplexVector vectorize(const ComplexMatrix& A) {
  ComplexVector v(A.rows() * A.cols());
  for (Index n = 0; n < A.rows(); ++n)
    for (Index m = 0; m < A.cols(); ++m) v(n * A.cols() + m) = A(n, m);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Index rows, Index cols) {
  if (rows * cols != v.size())
    throw DimensionError("unvectorize: length does not match the requested shape");
  ComplexMatrix A(rows, cols);
  for (Index n = 0; n < rows; ++n)
    for (Index m = 0; m < cols; ++m) A(n, m) = v(n * cols + m);
  return A;
}

ComplexMatrix unvectorize(const ComplexVector& v) {
  const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size())
    throw DimensionError("unvectorize: length is not a perfect square");
  return unvectorize(v, d, d);
}

double frobenius_distance(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionError("frobenius_distance: shape mismatch");
  return (A - B).norm();
}

}  // namespace qcomb
