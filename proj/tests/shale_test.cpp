// Copyright 2026 The piamp Authors
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

#include "piamp/shale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "piamp/caves_bound.hpp"
#include "piamp/errors.hpp"
#include "test_support.hpp"

using namespace piamp;
using piamp::fixtures::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2cd real2(double a, double b, double c, double d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

// Printed to four decimals.
const Eigen::Matrix2cd kS1 = real2(0.5240, 0.8517, 0.8517, -0.5240);
const Eigen::Matrix2cd kS2 = real2(-0.6840, -0.7295, -0.7295, 0.6840);
constexpr double kR1 = 1.6139;
constexpr double kR2 = -1.1327;

}  // namespace

TEST(shale, gain_two_factors) {
  const ComplexMatrix target = optimal_dc_matrix(AmplifierDCSpec(2.0)).full();
  const ShaleFactors f = shale_decompose(target);
  EXPECT_NEAR(f.r1, kR1, 1e-3);
  EXPECT_NEAR(f.r2, kR2, 1e-3);
  EXPECT_LT((f.s1 - kS1).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_LT((f.s2 - kS2).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_LT((shale_reconstruct(f) - target).norm(), 1e-9);
  EXPECT_TRUE(is_unitary(f.s1, 1e-10));
  EXPECT_TRUE(is_unitary(f.s2, 1e-10));
}

TEST(shale, printed_factors_reconstruct) {
  const ComplexMatrix target = optimal_dc_matrix(AmplifierDCSpec(2.0)).full();
  const ComplexMatrix printed = fixtures::shale_product(kS1, kR1, kR2, kS2);
  EXPECT_LT(fixtures::max_abs(printed - target), 1e-3);
}

TEST(shale, identity) {
  const ShaleFactors f = shale_decompose(ComplexMatrix::Identity(4, 4));
  EXPECT_NEAR(f.r1, 0.0, 1e-12);
  EXPECT_NEAR(f.r2, 0.0, 1e-12);
  EXPECT_LT((f.s1 * f.s2 + Eigen::Matrix2cd::Identity()).norm(), 1e-12);
  EXPECT_LT((shale_reconstruct(f) - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(shale, reconstruct_trivial) {
  ShaleFactors f{Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity(), 0.0, 0.0};
  EXPECT_LT((shale_reconstruct(f) + ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(shale, reconstruct_matches_explicit_product) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    ShaleFactors f{fixtures::random_unitary(rng, 2), fixtures::random_unitary(rng, 2),
                   fixtures::uniform(rng, -3, 3), fixtures::uniform(rng, -3, 3)};
    const ComplexMatrix full = shale_reconstruct(f);
    EXPECT_LT((full - fixtures::shale_product(f.s1, f.r1, f.r2, f.s2)).norm(), 1e-12 * full.norm());
    EXPECT_LT(bogoliubov_residual(full), 1e-10 * full.squaredNorm());
  }
}

TEST(shale, reconstruct_rejects_non_unitary) {
  ShaleFactors f{2.0 * Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Identity(), 0.1, 0.0};
  EXPECT_THROW(shale_reconstruct(f), ContractError);
}

TEST(shale, random_round_trip) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    double r1 = fixtures::uniform(rng, -3, 3);
    double r2 = fixtures::uniform(rng, -3, 3);
    if (trial % 10 == 1) r2 = r1;
    if (trial % 10 == 2) r2 = -r1;
    if (trial % 10 == 3) r2 = 0.0;
    if (trial % 10 == 4) r1 = r2 = 0.0;
    const ComplexMatrix full = fixtures::shale_product(fixtures::random_unitary(rng, 2), r1, r2,
                                                       fixtures::random_unitary(rng, 2));
    const ShaleFactors f = shale_decompose(full);
    const double scale = std::max(1.0, full.norm());
    EXPECT_LT((shale_reconstruct(f) - full).norm(), 1e-9 * scale) << "trial " << trial;
    EXPECT_GE(std::abs(f.r1), std::abs(f.r2) - 1e-12);
    std::array<double, 2> want{std::abs(r1), std::abs(r2)};
    std::sort(want.begin(), want.end(), std::greater<>());
    EXPECT_NEAR(std::abs(f.r1), want[0], 1e-8);
    EXPECT_NEAR(std::abs(f.r2), want[1], 1e-8);
    // cosh^2 - sinh^2 = 1 on the recovered values.
    for (double r : {f.r1, f.r2}) {
      EXPECT_NEAR(std::cosh(r) * std::cosh(r) - std::sinh(r) * std::sinh(r), 1.0,
                  1e-12 * std::cosh(r) * std::cosh(r));
    }
  }
}

TEST(shale, singular_values_bounded_below) {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix full = fixtures::random_phase_insensitive(rng, 3.0);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(Eigen::Matrix2cd(full.topLeftCorner(2, 2)));
    EXPECT_GE(svd.singularValues().minCoeff(), 1.0 - 1e-10);
  }
}

TEST(shale, decompose_errors) {
  EXPECT_THROW(shale_decompose(ComplexMatrix::Identity(2, 2)), DimensionError);
  EXPECT_THROW(shale_decompose(2.0 * ComplexMatrix::Identity(4, 4)), NotSymplecticError);
  ComplexMatrix not_delta = ComplexMatrix::Identity(4, 4);
  not_delta(0, 0) = Complex(0.0, 1.0);
  EXPECT_THROW(shale_decompose(not_delta), NotSymplecticError);
}

TEST(shale, beamsplitter_printed_values) {
  // The printed factors are not unitary to working precision; fit the computed ones.
  const ShaleFactors f = shale_decompose(optimal_dc_matrix(AmplifierDCSpec(2.0)).full());
  EXPECT_THROW(beamsplitter_params(kS1), ContractError);
  const BeamsplitterFit out = beamsplitter_params(f.s1);
  EXPECT_NEAR(out.params.theta, 0.5515, 1e-3);
  EXPECT_NEAR(out.params.phi1, 0.0, 1e-9);
  EXPECT_NEAR(out.params.phi2, 0.0, 1e-9);
  EXPECT_NEAR(out.params.phi3, 0.0, 1e-9);

  const BeamsplitterFit in = beamsplitter_params(f.s2);
  EXPECT_NEAR(in.params.theta, -0.7532, 1e-3);
  EXPECT_NEAR(in.params.phi1, 0.0, 1e-9);
  EXPECT_NEAR(std::abs(in.params.phi2), kPi, 1e-9);
  EXPECT_NEAR(std::abs(in.params.phi3), kPi, 1e-9);

  EXPECT_LT((bs_matrix(out.params) - kS1).cwiseAbs().maxCoeff(), 1e-4);
}

TEST(shale, beamsplitter_identity) {
  const BeamsplitterFit fit = beamsplitter_params(Eigen::Matrix2cd::Identity());
  EXPECT_NEAR(fit.params.theta, kPi / 2, 1e-12);
  EXPECT_NEAR(fit.params.phi1, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(fit.params.phi2), kPi, 1e-12);
  EXPECT_NEAR(fit.params.phi3, 0.0, 1e-12);
  EXPECT_LT((bs_matrix(fit.params) - Eigen::Matrix2cd::Identity()).norm(), 1e-12);
}

TEST(shale, bs_matrix_substitution) {
  const Eigen::Matrix2cd m = bs_matrix({kPi / 2, 0.0, 0.0, 0.0});
  EXPECT_LT((m - real2(1.0, 0.0, 0.0, -1.0)).norm(), 1e-15);
}

TEST(shale, bs_matrix_unitary_and_determinant) {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const BeamsplitterParams p{fixtures::uniform(rng, -kPi, kPi), fixtures::uniform(rng, -kPi, kPi),
                               fixtures::uniform(rng, -kPi, kPi), fixtures::uniform(rng, -kPi, kPi)};
    const Eigen::Matrix2cd m = bs_matrix(p);
    EXPECT_TRUE(is_unitary(m, 1e-12));
    EXPECT_LT(std::abs(m.determinant() + std::polar(1.0, p.phi1 + p.phi2 + p.phi3)), 1e-12);
    // Round trip through parameter extraction.
    const BeamsplitterFit fit = beamsplitter_params(m);
    EXPECT_LT((bs_matrix(fit.params) - m).norm(), 1e-10);
    EXPECT_NEAR(fit.global_phase, 0.0, 1e-12);
  }
}

TEST(shale, beamsplitter_haar_random) {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Matrix2cd u = fixtures::random_unitary(rng, 2);
    const BeamsplitterFit fit = beamsplitter_params(u);
    EXPECT_LT((bs_matrix(fit.params) * std::polar(1.0, -fit.global_phase) - u).norm(), 1e-10);
    for (double a : {fit.params.theta, fit.params.phi1, fit.params.phi2, fit.params.phi3}) {
      EXPECT_GT(a, -kPi);
      EXPECT_LE(a, kPi);
    }
  }
}

TEST(shale, beamsplitter_rejects_non_unitary) {
  EXPECT_THROW(beamsplitter_params(2.0 * Eigen::Matrix2cd::Identity()), ContractError);
}
