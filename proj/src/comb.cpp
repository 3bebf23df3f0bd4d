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

#include "qcomb/comb.hpp"

#include <cmath>
#include <sstream>

#include "qcomb/tensor.hpp"

namespace qcomb {

WireLayout::WireLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty() || dims_.size() % 2 != 0)
    throw DimensionError("WireLayout: wire count must be a positive even number");
  for (int d : dims_)
    if (d < 1) throw DimensionError("WireLayout: wire dimensions must be positive");
}

Index WireLayout::total_dim() const {
  Index t = 1;
  for (int d : dims_) t *= d;
  return t;
}

Index WireLayout::input_dim() const {
  Index t = 1;
  for (std::size_t i = 0; i < dims_.size(); i += 2) t *= dims_[i];
  return t;
}

Index WireLayout::output_dim() const {
  Index t = 1;
  for (std::size_t i = 1; i < dims_.size(); i += 2) t *= dims_[i];
  return t;
}

QuantumComb::QuantumComb(WireLayout layout_, ComplexMatrix matrix_)
    : layout(std::move(layout_)), matrix(std::move(matrix_)) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != layout.total_dim())
    throw DimensionError("QuantumComb: matrix size does not match the wire layout");
  if (!matrix.allFinite()) throw NumericalError("QuantumComb: matrix has non-finite entries");
}

ReducedComb reduced_comb(const QuantumComb& comb, int k) {
  const int n_wires = comb.layout.num_wires();
  const int N = comb.layout.num_teeth();
  if (k < 0 || k > N) throw DimensionError("reduced_comb: tooth index out of range");

  const SystemDims dims = comb.layout.system_dims();

  // Trace the output wires beyond the cut first; causality makes what is left
  // factorize as C^(k) on wires 0..2k-1 tensor identity on the even wires.
  std::vector<int> traced_odd, traced_even;
  Index even_dim = 1;
  for (int w = 2 * k; w < n_wires; ++w) {
    if (w % 2 == 1) {
      traced_odd.push_back(w);
    } else {
      traced_even.push_back(w);
      even_dim *= comb.layout.dim(w);
    }
  }

  ReducedComb out;
  if (traced_odd.empty() && traced_even.empty()) {
    out.matrix = comb.matrix;
    out.factor_residual = 0.0;
    return out;
  }

  const ComplexMatrix partial = partial_trace(comb.matrix, dims, traced_odd);

  // Remaining factors after tracing the odd tail: wires 0..2k-1 then the even
  // tail wires, all in ascending order.
  std::vector<int> rest_dims;
  for (int w = 0; w < 2 * k; ++w) rest_dims.push_back(comb.layout.dim(w));
  std::vector<int> tail_positions;
  for (std::size_t i = 0; i < traced_even.size(); ++i) {
    rest_dims.push_back(comb.layout.dim(traced_even[i]));
    tail_positions.push_back(2 * k + static_cast<int>(i));
  }

  out.matrix = partial_trace(partial, SystemDims(rest_dims), tail_positions) /
               static_cast<double>(even_dim);
  out.factor_residual = frobenius_distance(
      partial, kron(out.matrix, ComplexMatrix::Identity(even_dim, even_dim)));
  return out;
}

NormalizationReport verify_comb(const QuantumComb& comb, double tol) {
  const int N = comb.layout.num_teeth();
  NormalizationReport report;
  report.tolerance = tol;
  report.residuals.assign(static_cast<std::size_t>(N), 0.0);

  report.hermiticity_residual = (comb.matrix - comb.matrix.adjoint()).norm();

  // Spectrum of the Hermitian part; safe on garbage input, and identical to
  // the spectrum of C whenever C is Hermitian.
  const ComplexMatrix herm = 0.5 * (comb.matrix + comb.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.max_eigenvalue = solver.eigenvalues().maxCoeff();

  // Walk the levels k = N..1. C^(k-1) is recovered by tracing the last tooth
  // and dividing by its input dimension, except that the chain is anchored at
  // the exact scalar C^(0) = 1, which is what catches a mis-scaled operator.
  ComplexMatrix level = comb.matrix;
  std::vector<int> level_dims = comb.layout.dims();
  for (int k = N; k >= 1; --k) {
    const SystemDims dims(level_dims);
    const int last = 2 * k - 1;
    const ComplexMatrix traced = partial_trace(level, dims, {last});

    const int d_in = level_dims[static_cast<std::size_t>(last) - 1];
    ComplexMatrix prev;
    if (k == 1) {
      prev = ComplexMatrix::Identity(1, 1);
    } else {
      std::vector<int> rest(level_dims.begin(), level_dims.end() - 1);
      prev = partial_trace(traced, SystemDims(rest), {2 * k - 2}) / static_cast<double>(d_in);
    }
    report.residuals[static_cast<std::size_t>(k) - 1] = frobenius_distance(
        traced, kron(prev, ComplexMatrix::Identity(d_in, d_in)));

    level = std::move(prev);
    level_dims.resize(static_cast<std::size_t>(2 * (k - 1)));
  }

  bool ok = report.hermiticity_residual <= tol * std::max(1.0, comb.matrix.norm());
  for (double r : report.residuals) ok = ok && r <= tol;
  ok = ok && report.min_eigenvalue >= -tol * std::max(report.max_eigenvalue, 0.0);
  report.pass = ok;
  return report;
}

std::string NormalizationReport::summary() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  for (std::size_t i = 0; i < residuals.size(); ++i)
    os << "level " << (i + 1) << " residual: " << residuals[i] << "\n";
  os << "hermiticity residual: " << hermiticity_residual << "\n";
  os << "min eigenvalue: " << min_eigenvalue << "\n";
  os << "normalization: " << (pass ? "PASS" : "FAIL") << " (tol " << tolerance << ")";
  return os.str();
}

}  // namespace qcomb
