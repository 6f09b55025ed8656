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

#pragma once

// Doubled-up (Delta-form) complex matrices and the J metric.
//
// A doubled-up matrix pairs annihilation and creation components:
//
//     Delta(X1, X2) = [ X1    X2  ]
//                     [ X2^#  X1^# ]
//
// where ^# is elementwise complex conjugation. Only the top block row is
// stored, so the conjugate structure holds by construction.

#include <complex>

#include <Eigen/Dense>

namespace piamp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

class DoubledUpMatrix {
 public:
  DoubledUpMatrix() = default;
  // Throws DimensionError if the blocks differ in shape.
  DoubledUpMatrix(ComplexMatrix block1, ComplexMatrix block2);

  // Splits a full 2n x 2m matrix into its top block row. Throws
  // DimensionError for odd dimensions and ContractError when the lower
  // block row deviates from the conjugate of the upper one by more than
  // `tol` (Frobenius norm, relative to max(1, |full|)).
  static DoubledUpMatrix extract(const ComplexMatrix& full, double tol = 1e-10);

  const ComplexMatrix& block1() const { return block1_; }
  const ComplexMatrix& block2() const { return block2_; }

  // Half dimensions: the full matrix is 2*rows() x 2*cols().
  Eigen::Index rows() const { return block1_.rows(); }
  Eigen::Index cols() const { return block1_.cols(); }

  ComplexMatrix expand() const;

  // Delta(A1, A2) * Delta(B1, B2) = Delta(A1 B1 + A2 B2^#, A1 B2 + A2 B1^#).
  DoubledUpMatrix operator*(const DoubledUpMatrix& rhs) const;

 private:
  ComplexMatrix block1_;
  ComplexMatrix block2_;
};

inline ComplexMatrix delta_expand(const DoubledUpMatrix& d) { return d.expand(); }
inline DoubledUpMatrix delta_extract(const ComplexMatrix& full, double tol = 1e-10) {
  return DoubledUpMatrix::extract(full, tol);
}

// diag(I_n, -I_n).
ComplexMatrix j_matrix(Eigen::Index n);

// blkdiag(S, S^#) for a square S.
ComplexMatrix passive_block(const ComplexMatrix& s);

// Frobenius norm of Gbar^dagger J Gbar - J; zero iff Gbar preserves the
// J metric. Throws DimensionError unless Gbar is square of even size.
double bogoliubov_residual(const ComplexMatrix& gbar);

// Permutation P taking the grouped ordering (x_1..x_m, x_1^*..x_m^*) to the
// per-channel interleaved ordering (x_1, x_1^*, x_2, x_2^*, ...): (P v)
// lists v in interleaved order. P is orthogonal for every m and an involution
// for m <= 2. Throws DomainError for m < 1.
ComplexMatrix channel_permutation(Eigen::Index m);

bool is_unitary(const ComplexMatrix& u, double tol);
bool is_hermitian(const ComplexMatrix& h, double tol);

}  // namespace piamp
