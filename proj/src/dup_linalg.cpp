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

#include "piamp/dup_linalg.hpp"

#include <algorithm>
#include <string>

#include "piamp/errors.hpp"

namespace piamp {

DoubledUpMatrix::DoubledUpMatrix(ComplexMatrix block1, ComplexMatrix block2)
    : block1_(std::move(block1)), block2_(std::move(block2)) {
  if (block1_.rows() != block2_.rows() || block1_.cols() != block2_.cols()) {
    throw DimensionError("doubled-up blocks differ in shape: " + std::to_string(block1_.rows()) +
                         "x" + std::to_string(block1_.cols()) + " vs " +
                         std::to_string(block2_.rows()) + "x" + std::to_string(block2_.cols()));
  }
}

DoubledUpMatrix DoubledUpMatrix::extract(const ComplexMatrix& full, double tol) {
  if (full.rows() % 2 != 0 || full.cols() % 2 != 0) {
    throw DimensionError("doubled-up matrix must have even dimensions");
  }
  const Eigen::Index n = full.rows() / 2;
  const Eigen::Index m = full.cols() / 2;
  ComplexMatrix b1 = full.topLeftCorner(n, m);
  ComplexMatrix b2 = full.topRightCorner(n, m);
  const double mismatch = (full.bottomLeftCorner(n, m) - b2.conjugate()).norm() +
                          (full.bottomRightCorner(n, m) - b1.conjugate()).norm();
  if (mismatch > tol * std::max(1.0, full.norm())) {
    throw ContractError("matrix is not of doubled-up form (conjugate block mismatch " +
                        std::to_string(mismatch) + ")");
  }
  return DoubledUpMatrix(std::move(b1), std::move(b2));
}

ComplexMatrix DoubledUpMatrix::expand() const {
  const Eigen::Index n = rows();
  const Eigen::Index m = cols();
  ComplexMatrix full(2 * n, 2 * m);
  full.topLeftCorner(n, m) = block1_;
  full.topRightCorner(n, m) = block2_;
  full.bottomLeftCorner(n, m) = block2_.conjugate();
  full.bottomRightCorner(n, m) = block1_.conjugate();
  return full;
}

DoubledUpMatrix DoubledUpMatrix::operator*(const DoubledUpMatrix& rhs) const {
  if (cols() != rhs.rows()) {
    throw DimensionError("doubled-up product: inner dimensions differ");
  }
  return DoubledUpMatrix(block1_ * rhs.block1_ + block2_ * rhs.block2_.conjugate(),
                         block1_ * rhs.block2_ + block2_ * rhs.block1_.conjugate());
}

ComplexMatrix j_matrix(Eigen::Index n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  j.topLeftCorner(n, n).setIdentity();
  j.bottomRightCorner(n, n) = -ComplexMatrix::Identity(n, n);
  return j;
}

ComplexMatrix passive_block(const ComplexMatrix& s) {
  return DoubledUpMatrix(s, ComplexMatrix::Zero(s.rows(), s.cols())).expand();
}

double bogoliubov_residual(const ComplexMatrix& gbar) {
  if (gbar.rows() != gbar.cols() || gbar.rows() % 2 != 0) {
    throw DimensionError("bogoliubov_residual needs a square matrix of even size, got " +
                         std::to_string(gbar.rows()) + "x" + std::to_string(gbar.cols()));
  }
  const ComplexMatrix j = j_matrix(gbar.rows() / 2);
  return (gbar.adjoint() * j * gbar - j).norm();
}

ComplexMatrix channel_permutation(Eigen::Index m) {
  if (m < 1) {
    throw DomainError("channel_permutation needs m >= 1");
  }
  ComplexMatrix p = ComplexMatrix::Zero(2 * m, 2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    p(2 * k, k) = 1.0;
    p(2 * k + 1, m + k) = 1.0;
  }
  return p;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= tol;
}

}  // namespace piamp
