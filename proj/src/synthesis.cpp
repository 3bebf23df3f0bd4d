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

#include "qcomb/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcomb/eig.hpp"
#include "qcomb/random.hpp"
#include "qcomb/tensor.hpp"

namespace qcomb {

void validate_network(const SynthesizedNetwork& net) {
  const int N = net.layout.num_teeth();
  if (static_cast<int>(net.steps.size()) != N)
    throw DimensionError("network: step count does not match the layout");
  if (static_cast<int>(net.ancilla_dims.size()) != N + 1 || net.ancilla_dims[0] != 1)
    throw DimensionError("network: ancilla_dims must list r_0 = 1 through r_N");
  for (int k = 1; k <= N; ++k) {
    const IsometryStep& step = net.steps[static_cast<std::size_t>(k) - 1];
    if (step.k != k) throw DimensionError("network: steps out of order");
    if (step.d_in != net.layout.dim(2 * k - 2) || step.d_out != net.layout.dim(2 * k - 1))
      throw DimensionError("network: step dimensions disagree with the layout");
    if (step.r_prev != net.ancilla_dims[static_cast<std::size_t>(k) - 1] ||
        step.r_next != net.ancilla_dims[static_cast<std::size_t>(k)])
      throw DimensionError("network: adjacent steps disagree on the ancilla dimension");
    if (step.matrix.rows() != step.d_out * step.r_next ||
        step.matrix.cols() != step.d_in * step.r_prev)
      throw DimensionError("network: step matrix shape mismatch");
  }
}

namespace {

// Spectral data of one reduced comb's conjugate: everything synthesis needs
// (support basis, square root, inverse square root) in factored form, from a
// single eigendecomposition. Eigenvalues are sorted descending, so the
// support is the leading block.
struct LevelSpectral {
  ComplexMatrix vecs;
  RealVector root;      // sqrt of the kept eigenvalues, zero past the rank
  RealVector inv_root;  // inverse of root on the support
  Index rank = 0;

  ComplexMatrix basis() const { return vecs.leftCols(rank); }
};

LevelSpectral analyze_level(const ComplexMatrix& m, double tol, double rank_eps) {
  const EigDecomposition eig = hermitian_eig(m, tol);
  const double lambda_max = eig.eigenvalues.size() > 0 ? std::max(eig.eigenvalues(0), 0.0) : 0.0;

  LevelSpectral out;
  out.vecs = eig.eigenvectors;
  out.root = RealVector::Zero(eig.eigenvalues.size());
  out.inv_root = RealVector::Zero(eig.eigenvalues.size());
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    if (lambda < -tol * lambda_max)
      throw NumericalError("synthesize: reduced comb has a negative eigenvalue " +
                           std::to_string(lambda));
    if (lambda > rank_eps * lambda_max && lambda > 0.0) {
      out.root(i) = std::sqrt(lambda);
      out.inv_root(i) = 1.0 / out.root(i);
      if (out.rank == i) ++out.rank;
    }
  }
  return out;
}

}  // namespace

SynthesizedNetwork synthesize(const QuantumComb& comb, double tol, double rank_eps) {
  const NormalizationReport report = verify_comb(comb, tol);
  if (!report.pass)
    throw ValidationError("synthesize: comb fails causal normalization\n" + report.summary());

  const int N = comb.layout.num_teeth();
  SynthesizedNetwork net{comb.layout, {1}, {}, {}};

  // Spectral data of C^(k-1)* carried between iterations.
  LevelSpectral prev;
  prev.vecs = ComplexMatrix::Identity(1, 1);
  prev.root = RealVector::Ones(1);
  prev.inv_root = RealVector::Ones(1);
  prev.rank = 1;
  Index r_prev = 1;
  Index dim_prev = 1;  // full doubled-space dimension at the previous tooth

  for (int k = 1; k <= N; ++k) {
    const int d_in = comb.layout.dim(2 * k - 2);
    const int d_out = comb.layout.dim(2 * k - 1);
    const Index dim_k = dim_prev * d_in * d_out;

    const ComplexMatrix curr_conj = reduced_comb(comb, k).matrix.conjugate();
    const LevelSpectral curr = analyze_level(curr_conj, tol, rank_eps);
    const Index r_next = curr.rank;

    // The compressed transfer operator S_k^dag C^(k)*^{1/2} (C^(k-1)*^{-1/2}
    // (x) I) collapses in the eigenbases: the left factor scales the rows of
    // S_k^dag, the right one acts blockwise through the previous support
    // basis scaled by the inverse roots.
    ComplexMatrix compressed = curr.vecs.leftCols(r_next).adjoint();  // r_next x dim_k
    compressed = curr.root.head(r_next).asDiagonal() * compressed;
    const ComplexMatrix prev_action =
        prev.vecs.leftCols(r_prev) * prev.inv_root.head(r_prev).asDiagonal();

    // Assemble V: the input wire is relabeled into the doubled space, a
    // maximally entangled pair is laid across the output wire and its doubled
    // copy, and both ancilla sides are compressed onto the support bases.
    // Doubled-space flat index: (a * d_in + x) * d_out + j.
    IsometryStep step;
    step.k = k;
    step.d_in = d_in;
    step.d_out = d_out;
    step.r_prev = r_prev;
    step.r_next = r_next;
    step.matrix = ComplexMatrix(d_out * r_next, d_in * r_prev);
    for (int x = 0; x < d_in; ++x)
      for (int j = 0; j < d_out; ++j) {
        const ComplexMatrix slice = compressed(
            Eigen::all, Eigen::seqN(static_cast<Index>(x) * d_out + j, dim_prev,
                                    static_cast<Index>(d_in) * d_out));
        step.matrix.block(static_cast<Index>(j) * r_next, static_cast<Index>(x) * r_prev,
                          r_next, r_prev) = slice * prev_action;
      }

    const double iso_residual =
        (step.matrix.adjoint() * step.matrix -
         ComplexMatrix::Identity(d_in * r_prev, d_in * r_prev))
            .norm();
    if (iso_residual > std::max(tol, 1e-10))
      throw NumericalError("synthesize: step " + std::to_string(k) +
                           " is not an isometry (residual " + std::to_string(iso_residual) +
                           "); rank structure of the reduced combs is inconsistent");

    net.steps.push_back(std::move(step));
    net.ancilla_dims.push_back(r_next);
    net.ancilla_bases.push_back(curr.basis());

    prev = curr;
    r_prev = r_next;
    dim_prev = dim_k;
  }
  return net;
}

namespace {

constexpr int kAncillaTag = -1;

struct RunningSpace {
  std::vector<int> tags;  // wire label per factor, kAncillaTag for the ancilla
  std::vector<int> dims;
};

// Reorders the rows of W (a matrix whose row index is a tensor index over
// `space`) so that the factors listed in `new_tags` come in that order.
ComplexMatrix reorder_rows(const ComplexMatrix& W, RunningSpace& space,
                           const std::vector<int>& new_tags) {
  std::vector<int> perm;
  std::vector<int> new_dims;
  perm.reserve(space.tags.size());
  for (int tag : new_tags) {
    const auto it = std::find(space.tags.begin(), space.tags.end(), tag);
    perm.push_back(static_cast<int>(it - space.tags.begin()));
    new_dims.push_back(space.dims[static_cast<std::size_t>(it - space.tags.begin())]);
  }
  const std::vector<Index> map = permuted_indices(SystemDims(space.dims), perm);
  ComplexMatrix out(W.rows(), W.cols());
  for (Index v = 0; v < W.rows(); ++v) out.row(v) = W.row(map[static_cast<std::size_t>(v)]);
  space.tags = new_tags;
  space.dims = new_dims;
  return out;
}

}  // namespace

ComplexMatrix network_isometry(const SynthesizedNetwork& net) {
  validate_network(net);
  const int N = net.layout.num_teeth();

  // Row factors: [input wire of the next tooth, ancilla, everything pending].
  RunningSpace space;
  space.tags = {0, kAncillaTag};
  space.dims = {net.layout.dim(0), 1};
  for (int k = 2; k <= N; ++k) {
    space.tags.push_back(2 * k - 2);
    space.dims.push_back(net.layout.dim(2 * k - 2));
  }

  ComplexMatrix W = ComplexMatrix::Identity(net.layout.input_dim(), net.layout.input_dim());

  for (int k = 1; k <= N; ++k) {
    const IsometryStep& step = net.steps[static_cast<std::size_t>(k) - 1];
    const Index s_in = step.matrix.cols();
    const Index s_out = step.matrix.rows();
    const Index rest = W.rows() / s_in;

    ComplexMatrix next(s_out * rest, W.cols());
    for (Index r = 0; r < rest; ++r) {
      const ComplexMatrix slice = W(Eigen::seqN(r, s_in, rest), Eigen::all);
      const ComplexMatrix mapped = step.matrix * slice;
      next(Eigen::seqN(r, s_out, rest), Eigen::all) = mapped;
    }
    W = std::move(next);

    space.tags[0] = 2 * k - 1;
    space.dims[0] = step.d_out;
    space.dims[1] = static_cast<int>(step.r_next);

    if (k < N) {
      std::vector<int> order{2 * k, kAncillaTag};
      for (int tag : space.tags)
        if (tag != 2 * k && tag != kAncillaTag) order.push_back(tag);
      W = reorder_rows(W, space, order);
    }
  }

  // Final row order: odd wires ascending, ancilla last.
  std::vector<int> order;
  for (int k = 1; k <= N; ++k) order.push_back(2 * k - 1);
  order.push_back(kAncillaTag);
  W = reorder_rows(W, space, order);
  return W;
}

ComplexMatrix reconstruct_choi(const SynthesizedNetwork& net) {
  const int N = net.layout.num_teeth();
  const ComplexMatrix W = network_isometry(net);

  // |W>><<W| lives on [odd wires, ancilla, even wires]; trace the ancilla.
  std::vector<int> dims;
  for (int k = 1; k <= N; ++k) dims.push_back(net.layout.dim(2 * k - 1));
  dims.push_back(static_cast<int>(net.ancilla_dims.back()));
  for (int k = 1; k <= N; ++k) dims.push_back(net.layout.dim(2 * k - 2));

  const ComplexVector w = vectorize(W);
  const ComplexMatrix traced = partial_trace(w * w.adjoint(), SystemDims(dims), {N});

  // Remaining factor order [1, 3, ..., 2N-1, 0, 2, ..., 2N-2] -> ascending.
  std::vector<int> perm;
  for (int w_label = 0; w_label < 2 * N; ++w_label)
    perm.push_back(w_label % 2 == 1 ? (w_label - 1) / 2 : N + w_label / 2);
  std::vector<int> old_dims;
  for (int k = 1; k <= N; ++k) old_dims.push_back(net.layout.dim(2 * k - 1));
  for (int k = 1; k <= N; ++k) old_dims.push_back(net.layout.dim(2 * k - 2));
  return permute_systems(traced, SystemDims(old_dims), perm);
}

ComplexMatrix apply_network(const SynthesizedNetwork& net, const ComplexMatrix& rho,
                            double tol) {
  if (rho.rows() != rho.cols() || rho.rows() != net.layout.input_dim())
    throw DimensionError("apply_network: state dimension does not match the input space");
  if ((rho - rho.adjoint()).norm() > tol * std::max(1.0, rho.norm()))
    throw NumericalError("apply_network: input state is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol)
    throw NumericalError("apply_network: input state is not positive semidefinite");
  if (std::abs(rho.trace().real() - 1.0) > std::max(tol, 1e-8))
    throw NumericalError("apply_network: input state must have unit trace");

  const ComplexMatrix W = network_isometry(net);
  const ComplexMatrix full = W * rho * W.adjoint();

  const int N = net.layout.num_teeth();
  std::vector<int> dims;
  for (int k = 1; k <= N; ++k) dims.push_back(net.layout.dim(2 * k - 1));
  dims.push_back(static_cast<int>(net.ancilla_dims.back()));
  return partial_trace(full, SystemDims(dims), {N});
}

SynthesizedNetwork random_network(const WireLayout& layout, const std::vector<Index>& ancilla,
                                  std::uint64_t seed) {
  const int N = layout.num_teeth();
  if (static_cast<int>(ancilla.size()) != N)
    throw DimensionError("random_network: expected one ancilla dimension per tooth");

  SynthesizedNetwork net{layout, {1}, {}, {}};
  Index r_prev = 1;
  for (int k = 1; k <= N; ++k) {
    const int d_in = layout.dim(2 * k - 2);
    const int d_out = layout.dim(2 * k - 1);
    const Index r_next = ancilla[static_cast<std::size_t>(k) - 1];
    if (r_next < 1) throw DimensionError("random_network: ancilla dimensions must be positive");
    if (static_cast<Index>(d_out) * r_next < static_cast<Index>(d_in) * r_prev)
      throw DimensionError("random_network: no isometry into a smaller space at tooth " +
                           std::to_string(k));

    IsometryStep step;
    step.k = k;
    step.d_in = d_in;
    step.d_out = d_out;
    step.r_prev = r_prev;
    step.r_next = r_next;
    step.matrix = haar_unitary(static_cast<int>(d_out * r_next), sub_seed(seed, static_cast<std::uint64_t>(k)))
                      .leftCols(d_in * r_prev);
    net.steps.push_back(std::move(step));
    net.ancilla_dims.push_back(r_next);
    net.ancilla_bases.push_back(ComplexMatrix::Identity(r_next, r_next));
    r_prev = r_next;
  }
  return net;
}

}  // namespace qcomb
