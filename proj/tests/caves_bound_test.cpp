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

#include "piamp/caves_bound.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "piamp/errors.hpp"
#include "test_support.hpp"

using namespace piamp;
using piamp::fixtures::Rng;

TEST(caves_bound, spec_domain) {
  EXPECT_NO_THROW(AmplifierDCSpec(1.0));
  EXPECT_NO_THROW(AmplifierDCSpec(Complex(0.0, -1.0)));
  EXPECT_THROW(AmplifierDCSpec(0.5), DomainError);
  EXPECT_THROW(AmplifierDCSpec(0.0), DomainError);
  EXPECT_THROW(AmplifierDCSpec(std::nan("")), DomainError);
}

TEST(caves_bound, min_added_noise_examples) {
  EXPECT_DOUBLE_EQ(min_added_noise(AmplifierDCSpec(2.0)), 3.0);
  EXPECT_DOUBLE_EQ(min_added_noise(AmplifierDCSpec(1.0)), 0.0);
  EXPECT_NEAR(min_added_noise(AmplifierDCSpec(Complex(1.0, 1.0))), 1.0, 1e-15);
}

TEST(caves_bound, optimal_matrix_gain_two) {
  const AmplifierGainMatrix m = optimal_dc_matrix(AmplifierDCSpec(2.0));
  Eigen::Matrix2cd g, h;
  g << 2.0, 0.0, std::sqrt(3.0) / 2.0, std::sqrt(5.0);
  h << 0.0, std::sqrt(3.0), std::sqrt(15.0) / 2.0, 1.0;
  EXPECT_LT((m.g - g).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((m.h - h).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(bogoliubov_residual(m.full()), 1e-12);
  EXPECT_NEAR(noise_figure(m), 3.0, 1e-12);
  EXPECT_TRUE(is_phase_insensitive(m, 1e-12));
  for (double r : pr_equation_residuals(m)) EXPECT_LT(r, 1e-12);
}

TEST(caves_bound, optimal_matrix_unit_gain) {
  const AmplifierGainMatrix m = optimal_dc_matrix(AmplifierDCSpec(1.0));
  Eigen::Matrix2cd g, h;
  g << 1.0, 0.0, 0.0, std::sqrt(2.0);
  h << 0.0, 0.0, 0.0, 1.0;
  EXPECT_LT((m.g - g).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((m.h - h).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(noise_figure(m), 0.0);
}

TEST(caves_bound, optimal_matrix_gain_three) {
  const AmplifierDCSpec spec(3.0);
  const AmplifierGainMatrix m = optimal_dc_matrix(spec);
  // h12 = sqrt(9 * 8) / 3.
  EXPECT_NEAR(std::norm(m.h(0, 1)), 8.0, 1e-12);
  EXPECT_NEAR(noise_figure(m), 8.0, 1e-12);
  EXPECT_NEAR(noise_figure(m), min_added_noise(spec), 1e-12);
}

TEST(caves_bound, noise_figure_examples) {
  AmplifierGainMatrix id{Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero()};
  EXPECT_EQ(noise_figure(id), 0.0);
  AmplifierGainMatrix m{Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Zero()};
  m.g(0, 1) = 1.0;
  m.h(0, 1) = 2.0;
  EXPECT_DOUBLE_EQ(noise_figure(m), 5.0);
}

TEST(caves_bound, phase_insensitivity) {
  AmplifierGainMatrix m{Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero()};
  m.h(0, 0) = 0.1;
  EXPECT_FALSE(is_phase_insensitive(m, 1e-3));
  EXPECT_TRUE(is_phase_insensitive(m, 0.2));
  EXPECT_THROW(is_phase_insensitive(m, 0.0), DomainError);
  EXPECT_THROW(is_phase_insensitive(m, -1.0), DomainError);
}

TEST(caves_bound, pr_residual_examples) {
  const AmplifierGainMatrix id{Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero()};
  for (double r : pr_equation_residuals(id)) EXPECT_EQ(r, 0.0);

  const AmplifierGainMatrix twice{2.0 * Eigen::Matrix2cd::Identity(), Eigen::Matrix2cd::Zero()};
  const auto res = pr_equation_residuals(twice);
  EXPECT_DOUBLE_EQ(res[2], 3.0);
  EXPECT_DOUBLE_EQ(res[4], 3.0);
  EXPECT_EQ(res[0], 0.0);
  EXPECT_EQ(res[3], 0.0);
}

TEST(caves_bound, from_full_round_trip) {
  const AmplifierGainMatrix m = optimal_dc_matrix(AmplifierDCSpec(Complex(1.5, -0.7)));
  const AmplifierGainMatrix back = AmplifierGainMatrix::from_full(m.full());
  EXPECT_EQ((back.g - m.g).norm(), 0.0);
  EXPECT_EQ((back.h - m.h).norm(), 0.0);
  EXPECT_THROW(AmplifierGainMatrix::from_full(ComplexMatrix::Identity(2, 2)), DimensionError);
}

TEST(caves_bound, complex_gain_literal_formula) {
  const Complex g11 = std::polar(2.0, 1.1);
  const AmplifierGainMatrix m = optimal_dc_matrix(AmplifierDCSpec(g11));
  EXPECT_EQ(m.g(0, 0), g11);
  EXPECT_NEAR(std::abs(m.h(0, 1) - std::sqrt(12.0) / std::conj(g11)), 0.0, 1e-15);
  EXPECT_EQ(m.g(1, 1), Complex(std::sqrt(5.0), 0.0));
  EXPECT_LT(bogoliubov_residual(m.full()), 1e-12);
}

TEST(caves_bound, bound_attainment_random) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const double mag = fixtures::uniform(rng, 1.0, 10.0);
    const double phase = fixtures::uniform(rng, -std::numbers::pi, std::numbers::pi);
    const AmplifierDCSpec spec(std::polar(mag, phase));
    const AmplifierGainMatrix m = optimal_dc_matrix(spec);
    EXPECT_NEAR(noise_figure(m) - min_added_noise(spec), 0.0, 1e-10 * std::max(1.0, mag * mag));
    EXPECT_LT(bogoliubov_residual(m.full()), 1e-10 * std::max(1.0, mag * mag));
    EXPECT_TRUE(is_phase_insensitive(m, 1e-15));
  }
}

TEST(caves_bound, bound_validity_random) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix full = fixtures::random_phase_insensitive(rng, 2.0);
    const AmplifierGainMatrix m = AmplifierGainMatrix::from_full(full);
    ASSERT_LT(std::abs(m.h(0, 0)), 1e-10);
    ASSERT_LT(bogoliubov_residual(full), 1e-9);
    const double gain2 = std::norm(m.g(0, 0));
    EXPECT_GE(noise_figure(m), gain2 - 1.0 - 1e-9);
    EXPECT_NEAR(std::norm(m.h(0, 1)) - std::norm(m.g(0, 1)), gain2 - 1.0, 1e-10 * std::max(1.0, gain2));
    for (double r : pr_equation_residuals(m)) EXPECT_LT(r, 1e-10 * std::max(1.0, gain2));
  }
}
