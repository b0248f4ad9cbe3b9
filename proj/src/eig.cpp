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

#include "porac/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace porac {

Hermitian::Hermitian(Matrix m, double tol) : mat_(std::move(m)) {
  if (!mat_.is_square())
    throw std::invalid_argument("Hermitian: matrix not square");
  const double defect = mat_.hermiticity_defect();
  if (defect > tol)
    throw std::invalid_argument("Hermitian: matrix fails hermiticity check, max asymmetry " +
                                std::to_string(defect) + " > tol " + std::to_string(tol));
  // Symmetrise so downstream arithmetic sees an exactly Hermitian matrix.
  for (std::size_t i = 0; i < mat_.rows(); ++i) {
    mat_(i, i) = cdouble(mat_(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < mat_.cols(); ++j) {
      const cdouble avg = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
      mat_(i, j) = avg;
      mat_(j, i) = std::conj(avg);
    }
  }
}

Matrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  Matrix scaled = vectors;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
  return scaled * vectors.adjoint();
}

namespace {

double off_diagonal_mass(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating A(p,q). The 2x2 unitary is
// diag(1, conj(w)) * G(theta) with w the phase of A(p,q) and G the classic
// smaller-angle real rotation.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const cdouble g = a(p, q);
  const double ag = std::abs(g);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  if (ag <= 1e-300) return;

  const cdouble w = g / ag;
  const double tau = (aqq - app) / (2.0 * ag);
  double t;
  if (tau >= 0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cdouble ws = w * s;
  const cdouble wc = w * c;

  const std::size_t n = a.rows();
  // Rows p,q: A <- U^dagger A.
  for (std::size_t j = 0; j < n; ++j) {
    const cdouble apj = a(p, j);
    const cdouble aqj = a(q, j);
    a(p, j) = c * apj - ws * aqj;
    a(q, j) = s * apj + wc * aqj;
  }
  // Columns p,q: A <- A U; same update for the accumulated V.
  const cdouble cws = std::conj(ws);
  const cdouble cwc = std::conj(wc);
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble aip = a(i, p);
    const cdouble aiq = a(i, q);
    a(i, p) = c * aip - cws * aiq;
    a(i, q) = s * aip + cwc * aiq;
    const cdouble vip = v(i, p);
    const cdouble viq = v(i, q);
    v(i, p) = c * vip - cws * viq;
    v(i, q) = s * vip + cwc * viq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cdouble(a(p, p).real(), 0.0);
  a(q, q) = cdouble(a(q, q).real(), 0.0);
}

}  // namespace

EigenDecomposition hermitian_eig(const Hermitian& h, double off_tol) {
  const std::size_t n = h.dim();
  Matrix a = h.mat();
  Matrix v = Matrix::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_mass(a) > off_tol * scale) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("hermitian_eig: Jacobi failed to converge in " +
                               std::to_string(kMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }

  // Re-orthonormalise degenerate clusters in index order so the returned basis
  // is reproducible and orthonormal to working precision.
  const double cluster_tol = 1e-9 * std::max(1.0, scale);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && out.eigenvalues[end] - out.eigenvalues[end - 1] <= cluster_tol) ++end;
    for (std::size_t j = start; j < end; ++j) {
      for (std::size_t k = start; k < j; ++k) {
        cdouble overlap = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          overlap += std::conj(out.vectors(i, k)) * out.vectors(i, j);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) -= overlap * out.vectors(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(out.vectors(i, j));
      norm = std::sqrt(norm);
      if (norm < 1e-12)
        throw std::runtime_error("hermitian_eig: degenerate cluster re-orthonormalisation broke down");
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) /= norm;
    }
    start = end;
  }
  return out;
}

double spectral_norm(const Hermitian& h, double off_tol) {
  const EigenDecomposition e = hermitian_eig(h, off_tol);
  double m = 0.0;
  for (double lam : e.eigenvalues) m = std::max(m, std::abs(lam));
  return m;
}

Hermitian sign_observable(const Hermitian& h, double tol, double off_tol) {
  const EigenDecomposition e = hermitian_eig(h, off_tol);
  const std::size_t n = h.dim();
  Matrix scaled = e.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = e.eigenvalues[j] >= -tol ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
  }
  Matrix g = scaled * e.vectors.adjoint();
  return Hermitian(std::move(g), 1e-10);
}

}  // namespace porac
