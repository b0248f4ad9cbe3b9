// Copyright 2026 porac authors
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

#ifndef PORAC_EIG_HPP
#define PORAC_EIG_HPP

#include <vector>

#include "porac/matrix.hpp"

namespace porac {

/// A validated Hermitian operator. Construction checks the hermiticity defect
/// (max entrywise |H - H^dagger|) against `tol` and rejects otherwise.
class Hermitian {
 public:
  explicit Hermitian(Matrix m, double tol = 1e-12);

  std::size_t dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

 private:
  Matrix mat_;
};

/// Spectral data of a Hermitian matrix: eigenvalues ascending, eigenvectors as
/// the matching orthonormal columns of `vectors`.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix vectors;

  Matrix reconstruct() const;  // V diag(lambda) V^dagger
};

/// Cyclic Jacobi diagonalisation of a complex Hermitian matrix. Deterministic:
/// fixed sweep order, stable eigenvalue sort, Gram-Schmidt in index order
/// inside degenerate clusters. `off_tol` bounds the off-diagonal Frobenius
/// mass relative to the matrix norm at convergence.
EigenDecomposition hermitian_eig(const Hermitian& h, double off_tol = 1e-13);

/// Largest |eigenvalue| (equals the largest singular value for Hermitian input).
double spectral_norm(const Hermitian& h, double off_tol = 1e-13);

/// P+ - P- where P+ projects onto the span of eigenvectors with eigenvalue
/// >= -tol and P- onto the rest. Squares to the identity.
Hermitian sign_observable(const Hermitian& h, double tol = 0.0, double off_tol = 1e-13);

}  // namespace porac

#endif  // PORAC_EIG_HPP
