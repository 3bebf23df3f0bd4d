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

#include "qcomb/inversion.hpp"

#include <cmath>

#include "qcomb/random.hpp"
#include "qcomb/tensor.hpp"

namespace qcomb {

namespace {

ComplexMatrix swap_matrix(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(static_cast<Index>(d) * d, static_cast<Index>(d) * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  return s;
}

int game_dim(const WireLayout& layout, const char* op) {
  if (layout.num_wires() != 4)
    throw DimensionError(std::string(op) + ": expected a comb on four wires");
  const int d = layout.dim(0);
  for (int w = 1; w < 4; ++w)
    if (layout.dim(w) != d)
      throw DimensionError(std::string(op) + ": expected equal wire dimensions");
  return d;
}

// P^mu on wires (3,1) tensor P^nu on wires (2,0), in canonical ascending
// wire order. mu/nu: 0 = symmetric, 1 = antisymmetric.
std::array<std::array<ComplexMatrix, 2>, 2> covariant_basis(int d) {
  const auto [p_plus, p_minus] = symmetry_projectors(d);
  const std::array<ComplexMatrix, 2> p{p_plus, p_minus};
  // kron(P_(31), P_(20)) carries factor order [3,1,2,0]; canonical position p
  // holds the old factor perm[p].
  const std::vector<int> perm{3, 1, 2, 0};
  const SystemDims dims{d, d, d, d};
  std::array<std::array<ComplexMatrix, 2>, 2> basis;
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu)
      basis[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          permute_systems(kron(p[static_cast<std::size_t>(mu)],
                               p[static_cast<std::size_t>(nu)]),
                          dims, perm);
  return basis;
}

}  // namespace

std::pair<ComplexMatrix, ComplexMatrix> symmetry_projectors(int d) {
  if (d < 2) throw DimensionError("symmetry_projectors: dimension must be at least 2");
  const ComplexMatrix id = ComplexMatrix::Identity(static_cast<Index>(d) * d,
                                                   static_cast<Index>(d) * d);
  const ComplexMatrix swap = swap_matrix(d);
  return {0.5 * (id + swap), 0.5 * (id - swap)};
}

QuantumComb optimal_inversion_comb(int d) {
  if (d < 2) throw DimensionError("optimal_inversion_comb: dimension must be at least 2");
  const auto basis = covariant_basis(d);
  const double d_plus = d * (d + 1) / 2.0;
  const double d_minus = d * (d - 1) / 2.0;
  const ComplexMatrix c = basis[0][0] / d_plus + basis[1][1] / d_minus;
  return QuantumComb(WireLayout({d, d, d, d}), c);
}

CovariantCoefficients covariant_coefficients(const QuantumComb& comb) {
  const int d = game_dim(comb.layout, "covariant_coefficients");
  const auto basis = covariant_basis(d);
  CovariantCoefficients coeffs;
  coeffs.d = d;
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      const double weight = static_cast<double>(coeffs.block_dim(mu)) *
                            static_cast<double>(coeffs.block_dim(nu));
      coeffs.a[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          (comb.matrix *
           basis[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)])
              .trace()
              .real() /
          weight;
    }
  return coeffs;
}

QuantumComb twirl(const QuantumComb& comb) {
  const int d = game_dim(comb.layout, "twirl");
  const auto basis = covariant_basis(d);
  const CovariantCoefficients coeffs = covariant_coefficients(comb);
  ComplexMatrix out = ComplexMatrix::Zero(comb.matrix.rows(), comb.matrix.cols());
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu)
      out += coeffs.a[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] *
             basis[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
  return QuantumComb(comb.layout, out);
}

double gate_fidelity(const QuantumComb& comb, const ComplexMatrix& U, double tol) {
  const int d = game_dim(comb.layout, "gate_fidelity");
  if (U.rows() != d || U.cols() != d)
    throw DimensionError("gate_fidelity: unitary dimension does not match the comb wires");
  if ((U.adjoint() * U - ComplexMatrix::Identity(d, d)).norm() > tol)
    throw NumericalError("gate_fidelity: input is not unitary within tolerance");

  // |U^dag>>_30 (x) |U^*>>_21 carries factor order [3,0,2,1]; bring the
  // probe vector into canonical wire order before the quadratic form.
  const ComplexVector v = kron(vectorize(U.adjoint()), vectorize(U.conjugate()));
  const SystemDims dims{d, d, d, d};
  const std::vector<Index> map = permuted_indices(dims, {1, 3, 2, 0});
  ComplexVector probe(v.size());
  for (Index i = 0; i < v.size(); ++i) probe(i) = v(map[static_cast<std::size_t>(i)]);

  return (probe.adjoint() * comb.matrix * probe)(0, 0).real() /
         (static_cast<double>(d) * d);
}

double average_fidelity_covariant(const QuantumComb& comb, double tol) {
  const int d = game_dim(comb.layout, "average_fidelity_covariant");
  const QuantumComb averaged = twirl(comb);
  const double dist = frobenius_distance(comb.matrix, averaged.matrix);
  if (dist > tol * std::max(1.0, comb.matrix.norm()))
    throw ValidationError("average_fidelity_covariant: comb is not covariant (distance " +
                          std::to_string(dist) + " from its group average); twirl it first");
  const CovariantCoefficients coeffs = covariant_coefficients(comb);
  double f = 0.0;
  for (int nu = 0; nu < 2; ++nu)
    f += coeffs.a[static_cast<std::size_t>(nu)][static_cast<std::size_t>(nu)] *
         coeffs.block_dim(nu);
  return f / (static_cast<double>(d) * d);
}

MonteCarloEstimate average_fidelity_mc(const QuantumComb& comb, std::size_t n,
                                       std::uint64_t seed) {
  const int d = game_dim(comb.layout, "average_fidelity_mc");
  if (n < 2) throw DimensionError("average_fidelity_mc: need at least two samples");

  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; ++i)
    samples[i] = gate_fidelity(comb, haar_unitary(d, sub_seed(seed, i)));

  MonteCarloEstimate est;
  est.samples = n;
  double sum = 0.0;
  for (double s : samples) sum += s;
  est.mean = sum / static_cast<double>(n);
  double ssq = 0.0;
  for (double s : samples) ssq += (s - est.mean) * (s - est.mean);
  est.std_error = std::sqrt(ssq / (static_cast<double>(n) - 1.0) / static_cast<double>(n));
  return est;
}

std::pair<CovariantCoefficients, double> optimize_covariant(int d) {
  if (d < 2) throw DimensionError("optimize_covariant: dimension must be at least 2");
  // Each column nu satisfies a^{+nu} d_+ + a^{-nu} d_- = 1 independently and
  // only the diagonal enters the objective, so all weight goes to mu = nu.
  CovariantCoefficients coeffs;
  coeffs.d = d;
  coeffs.a[0][0] = 1.0 / coeffs.d_plus();
  coeffs.a[0][1] = 0.0;
  coeffs.a[1][0] = 0.0;
  coeffs.a[1][1] = 1.0 / coeffs.d_minus();
  const double f = 2.0 / (static_cast<double>(d) * d);
  return {coeffs, f};
}

}  // namespace qcomb
