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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcomb/eig.hpp"
#include "qcomb/inversion.hpp"
#include "qcomb/synthesis.hpp"
#include "qcomb/tensor.hpp"
#include "test_support.hpp"

using namespace qcomb;

namespace {

double isometry_residual(const IsometryStep& step) {
  return (step.matrix.adjoint() * step.matrix -
          ComplexMatrix::Identity(step.matrix.cols(), step.matrix.cols()))
      .norm();
}

ComplexMatrix rand_state(Index d, std::mt19937_64& rng) {
  const ComplexMatrix x = test::rand_matrix(d, d, rng);
  const ComplexMatrix p = x * x.adjoint();
  return p / p.trace().real();
}

}  // namespace

TEST_CASE("identity-channel comb synthesizes to a single trivial step") {
  const SynthesizedNetwork net = synthesize(test::identity_comb(2));
  REQUIRE(net.steps.size() == 1);
  CHECK(net.ancilla_dims == std::vector<Index>{1, 1});
  CHECK(net.steps[0].matrix.rows() == 2);
  CHECK(net.steps[0].matrix.cols() == 2);
  CHECK((net.steps[0].matrix - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);

  CHECK(frobenius_distance(reconstruct_choi(net), test::identity_comb(2).matrix) <= 1e-10);
}

TEST_CASE("optimal inversion comb: minimal ancillas and first-step structure") {
  const int d = 2;
  const QuantumComb comb = optimal_inversion_comb(d);
  const SynthesizedNetwork net = synthesize(comb);

  CHECK(net.ancilla_dims == std::vector<Index>{1, 4, 10});
  for (const IsometryStep& step : net.steps) CHECK(isometry_residual(step) <= 1e-10);

  // The first isometry lays a maximally entangled pair across the output wire
  // and its doubled copy while storing the input wire, compressed through the
  // recorded ancilla basis: V1[(j, a), x] = conj(S1(x*d + j, a)) / sqrt(d).
  const ComplexMatrix& s1 = net.ancilla_bases[0];
  const IsometryStep& v1 = net.steps[0];
  REQUIRE(s1.rows() == d * d);
  REQUIRE(s1.cols() == v1.r_next);
  for (int x = 0; x < d; ++x)
    for (int j = 0; j < d; ++j)
      for (Index a = 0; a < v1.r_next; ++a) {
        const Complex expected = std::conj(s1(static_cast<Index>(x) * d + j, a)) /
                                 std::sqrt(static_cast<double>(d));
        CHECK(std::abs(v1.matrix(static_cast<Index>(j) * v1.r_next + a, x) - expected) <=
              1e-12);
      }

  CHECK(frobenius_distance(reconstruct_choi(net), comb.matrix) <= 1e-8);
}

TEST_CASE("synthesize refuses a non-causal operator") {
  const QuantumComb scaled(WireLayout({2, 2}), 2.0 * test::max_ent_projector(2));
  CHECK_THROWS_AS(synthesize(scaled), ValidationError);
}

TEST_CASE("random networks: generation, isometries, determinism") {
  const WireLayout layout({2, 2, 2, 3});
  const SynthesizedNetwork net = random_network(layout, {3, 2}, 555);
  REQUIRE(net.steps.size() == 2);
  for (const IsometryStep& step : net.steps) CHECK(isometry_residual(step) <= 1e-12);

  const SynthesizedNetwork again = random_network(layout, {3, 2}, 555);
  for (int k = 0; k < 2; ++k)
    CHECK((net.steps[static_cast<std::size_t>(k)].matrix -
           again.steps[static_cast<std::size_t>(k)].matrix)
              .norm() == 0.0);

  const SynthesizedNetwork single = random_network(WireLayout({2, 2}), {1}, 7);
  CHECK(single.steps[0].matrix.rows() == 2);
  CHECK((single.steps[0].matrix.adjoint() * single.steps[0].matrix -
         ComplexMatrix::Identity(2, 2))
            .norm() <= 1e-12);

  CHECK_THROWS_AS(random_network(WireLayout({3, 2}), {1}, 7), DimensionError);
  CHECK_THROWS_AS(random_network(layout, {3}, 7), DimensionError);
}

TEST_CASE("round-trip and minimality over random networks") {
  struct Config {
    std::vector<int> dims;
    std::vector<Index> anc;
    std::uint64_t seed;
  };
  const std::vector<Config> configs{
      {{2, 2}, {2}, 10},          {{3, 2}, {4}, 11},          {{2, 3, 2, 2}, {2, 2}, 12},
      {{2, 2, 2, 2}, {4, 4}, 13}, {{3, 3, 2, 3}, {2, 4}, 14}, {{2, 2, 2, 2, 2, 2}, {2, 2, 2}, 15},
  };

  for (const Config& config : configs) {
    CAPTURE(config.seed);
    const WireLayout layout(config.dims);
    const SynthesizedNetwork gen = random_network(layout, config.anc, config.seed);
    const QuantumComb comb(layout, reconstruct_choi(gen));

    CHECK(verify_comb(comb, 1e-10).pass);

    const SynthesizedNetwork synth = synthesize(comb);
    for (std::size_t k = 0; k < config.anc.size(); ++k)
      CHECK(synth.ancilla_dims[k + 1] <= config.anc[k]);
    for (const IsometryStep& step : synth.steps) CHECK(isometry_residual(step) <= 1e-10);

    CHECK(frobenius_distance(reconstruct_choi(synth), comb.matrix) <= 1e-8);

    // r_k must equal an independent eigenvalue count of the reduced combs.
    for (int k = 1; k <= layout.num_teeth(); ++k) {
      const ComplexMatrix ck = reduced_comb(comb, k).matrix;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(ck, Eigen::EigenvaluesOnly);
      const double lmax = solver.eigenvalues().maxCoeff();
      Index rank = 0;
      for (Index i = 0; i < solver.eigenvalues().size(); ++i)
        if (solver.eigenvalues()(i) > default_rank_eps * lmax) ++rank;
      CHECK(synth.ancilla_dims[static_cast<std::size_t>(k)] == rank);
    }
  }
}

TEST_CASE("reconstruct_choi agrees with the link-product contraction oracle") {
  const WireLayout two_teeth({2, 3, 2, 2});
  const SynthesizedNetwork net2 = random_network(two_teeth, {2, 3}, 77);
  CHECK((reconstruct_choi(net2) - test::comb_via_link(net2)).norm() <= 1e-10);

  const WireLayout three_teeth({2, 2, 2, 2, 2, 2});
  const SynthesizedNetwork net3 = random_network(three_teeth, {2, 3, 3}, 78);
  CHECK((reconstruct_choi(net3) - test::comb_via_link(net3)).norm() <= 1e-10);
}

TEST_CASE("degenerate wire dimensions") {
  std::mt19937_64 rng(62);

  SUBCASE("state preparation: trivial input wire") {
    // A comb on wires (0,1) with dim(0) = 1 is just the prepared state.
    const WireLayout layout({1, 2});
    const SynthesizedNetwork gen = random_network(layout, {2}, 303);
    const QuantumComb comb(layout, reconstruct_choi(gen));
    CHECK(verify_comb(comb, 1e-10).pass);
    CHECK(std::abs(comb.matrix.trace().real() - 1.0) <= 1e-10);

    const SynthesizedNetwork synth = synthesize(comb);
    CHECK(frobenius_distance(reconstruct_choi(synth), comb.matrix) <= 1e-8);

    const ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    CHECK((apply_network(synth, one) - comb.matrix).norm() <= 1e-10);
  }

  SUBCASE("trace channel: trivial output wire") {
    // Discarding a qubit: the Choi operator is I_2 on the input wire.
    const WireLayout layout({2, 1});
    const QuantumComb comb(layout, ComplexMatrix::Identity(2, 2));
    CHECK(verify_comb(comb, 1e-12).pass);

    const SynthesizedNetwork synth = synthesize(comb);
    CHECK(synth.ancilla_dims == std::vector<Index>{1, 2});
    CHECK(frobenius_distance(reconstruct_choi(synth), comb.matrix) <= 1e-10);

    const ComplexMatrix rho = rand_state(2, rng);
    const ComplexMatrix out = apply_network(synth, rho);
    REQUIRE(out.rows() == 1);
    CHECK(std::abs(out(0, 0) - Complex(1.0, 0.0)) <= 1e-10);
  }
}

TEST_CASE("apply_network") {
  std::mt19937_64 rng(61);

  SUBCASE("identity network returns the input state") {
    const SynthesizedNetwork net = synthesize(test::identity_comb(2));
    const ComplexMatrix rho = rand_state(2, rng);
    CHECK((apply_network(net, rho) - rho).norm() <= 1e-10);
  }

  SUBCASE("trace preservation and agreement with the Choi action") {
    const WireLayout layout({2, 2, 2, 3});
    const SynthesizedNetwork net = random_network(layout, {3, 2}, 88);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix rho = rand_state(layout.input_dim(), rng);
      const ComplexMatrix out = apply_network(net, rho);
      CHECK(std::abs(out.trace().real() - 1.0) <= 1e-10);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(out, Eigen::EigenvaluesOnly);
      CHECK(solver.eigenvalues().minCoeff() >= -1e-10);

      const ComplexMatrix oracle =
          test::choi_action_via_link(reconstruct_choi(net), layout, rho);
      CHECK((out - oracle).norm() <= 1e-10);
    }
  }

  SUBCASE("rejects invalid states") {
    const SynthesizedNetwork net = synthesize(test::identity_comb(2));
    CHECK_THROWS_AS(apply_network(net, ComplexMatrix::Identity(3, 3)), DimensionError);
    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 2.0;
    neg(1, 1) = -1.0;
    CHECK_THROWS_AS(apply_network(net, neg), NumericalError);
  }
}
