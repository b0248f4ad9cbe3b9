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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "porac/eig.hpp"
#include "porac/matrix.hpp"
#include "porac/pauli.hpp"
#include "test_util.hpp"

using namespace porac;
using porac::test::orthonormalized;
using porac::test::random_complex;
using porac::test::random_dyadic;
using porac::test::random_hermitian;

namespace {

const Matrix& X() { return pauli_matrix(Pauli::X); }
const Matrix& Y() { return pauli_matrix(Pauli::Y); }
const Matrix& Z() { return pauli_matrix(Pauli::Z); }
const Matrix& I2() { return pauli_matrix(Pauli::I); }

double unit_col_norm_defect(const Matrix& v) {
  const Matrix gram = v.adjoint() * v;
  return gram.max_abs_diff(Matrix::identity(v.cols()));
}

}  // namespace

TEST_CASE("kron identity and block structure") {
  CHECK(kron(I2(), I2()).max_abs_diff(Matrix::identity(4)) == 0.0);

  const Matrix zx = kron(Z(), X());
  CHECK(zx(0, 1) == cdouble(1.0));
  CHECK(zx(1, 0) == cdouble(1.0));
  CHECK(zx(2, 3) == cdouble(-1.0));
  CHECK(zx(3, 2) == cdouble(-1.0));
  CHECK(zx(0, 0) == cdouble(0.0));
  CHECK(zx(0, 3) == cdouble(0.0));
}

TEST_CASE("kron product identity for the three-bit observables") {
  const Matrix a31 = kron(X(), X());
  const Matrix ap = kron(X(), I2());
  const Matrix at31 = kron(I2(), X());
  CHECK((a31 * ap).max_abs_diff(at31) == 0.0);
}

TEST_CASE("kron associativity is exact on dyadic matrices") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = random_dyadic(2, 3, rng);
    const Matrix b = random_dyadic(3, 2, rng);
    const Matrix c = random_dyadic(2, 2, rng);
    CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) == 0.0);
  }
}

TEST_CASE("kron mixed-product property") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = random_complex(3, 2, rng);
    const Matrix c = random_complex(2, 3, rng);
    const Matrix b = random_complex(2, 4, rng);
    const Matrix d = random_complex(4, 2, rng);
    const Matrix lhs = kron(a, b) * kron(c, d);
    const Matrix rhs = kron(a * c, b * d);
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on the Pauli matrices") {
  const EigenDecomposition ez = hermitian_eig(Hermitian(Z()));
  CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));

  const EigenDecomposition ex = hermitian_eig(Hermitian(X()));
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
  // Eigenvectors proportional to (1, -/+1)/sqrt(2).
  for (int j = 0; j < 2; ++j) {
    const cdouble ratio = ex.vectors(1, j) / ex.vectors(0, j);
    CHECK(std::abs(ratio - cdouble(j == 0 ? -1.0 : 1.0)) < 1e-10);
  }
}

TEST_CASE("hermitian_eig on 6I - 4 ZZ") {
  Matrix m = cdouble(6.0) * Matrix::identity(4) - cdouble(4.0) * kron(Z(), Z());
  const EigenDecomposition e = hermitian_eig(Hermitian(m));
  CHECK(e.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(e.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(e.eigenvalues[2] == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(e.eigenvalues[3] == doctest::Approx(10.0).epsilon(1e-13));
}

TEST_CASE("eigendecomposition reconstructs the input") {
  std::mt19937_64 rng(13);
  for (std::size_t dim : {2u, 3u, 5u, 8u, 16u, 24u}) {
    const Matrix h = random_hermitian(dim, rng);
    const EigenDecomposition e = hermitian_eig(Hermitian(h, 1e-10));
    CHECK(e.reconstruct().max_abs_diff(h) < 1e-10);
    CHECK(unit_col_norm_defect(e.vectors) < 1e-10);
    // Ascending order and H v = lambda v per column.
    for (std::size_t j = 0; j + 1 < dim; ++j) CHECK(e.eigenvalues[j] <= e.eigenvalues[j + 1]);
    Matrix hv = h * e.vectors;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i)
        CHECK(std::abs(hv(i, j) - e.eigenvalues[j] * e.vectors(i, j)) < 1e-10);
  }
}

TEST_CASE("eigendecomposition handles degenerate spectra") {
  std::mt19937_64 rng(14);
  const Matrix q = orthonormalized(random_complex(6, 6, rng));
  std::vector<double> lams = {-2.0, -2.0, 0.5, 0.5, 0.5, 3.0};
  Matrix scaled = q;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i) scaled(i, j) *= lams[j];
  const Matrix h = scaled * q.adjoint();
  const EigenDecomposition e = hermitian_eig(Hermitian(h, 1e-12));
  for (std::size_t j = 0; j < 6; ++j)
    CHECK(e.eigenvalues[j] == doctest::Approx(lams[j]).epsilon(1e-11));
  CHECK(unit_col_norm_defect(e.vectors) < 1e-10);
  CHECK(e.reconstruct().max_abs_diff(h) < 1e-10);
}

TEST_CASE("non-Hermitian input is rejected with the asymmetry magnitude") {
  Matrix m(2, 2);
  m(0, 1) = cdouble(1.0);
  m(1, 0) = cdouble(0.5);
  CHECK_THROWS_WITH_AS(Hermitian{m}, doctest::Contains("asymmetry"), std::invalid_argument);
}

TEST_CASE("spectral_norm examples") {
  CHECK(spectral_norm(Hermitian(X())) == doctest::Approx(1.0).epsilon(1e-13));

  // Oracle: the square collapses to 2I because the two terms anticommute.
  const Matrix m = kron(X(), X()) + kron(X(), Z());
  CHECK((m * m).max_abs_diff(cdouble(2.0) * Matrix::identity(4)) == 0.0);
  CHECK(spectral_norm(Hermitian(m)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));

  // Oracle: the square is 6I - 4 ZZ, whose spectrum is {2, 2, 10, 10}.
  const Matrix w = cdouble(2.0) * kron(Y(), Y()) + kron(Y(), X()) + kron(X(), X());
  const Matrix expected_sq = cdouble(6.0) * Matrix::identity(4) - cdouble(4.0) * kron(Z(), Z());
  CHECK((w * w).max_abs_diff(expected_sq) < 1e-14);
  CHECK(spectral_norm(Hermitian(w)) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-13));
}

TEST_CASE("spectral_norm agrees with the eigenvalue maximum") {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix h = random_hermitian(5, rng);
    const EigenDecomposition e = hermitian_eig(Hermitian(h, 1e-10));
    double expect = 0.0;
    for (double lam : e.eigenvalues) expect = std::max(expect, std::abs(lam));
    CHECK(spectral_norm(Hermitian(h, 1e-10)) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("sign_observable examples and invariants") {
  CHECK(sign_observable(Hermitian(Z())).mat().max_abs_diff(Z()) < 1e-12);
  CHECK(sign_observable(Hermitian(cdouble(3.0) * X())).mat().max_abs_diff(X()) < 1e-12);

  // Flat spectrum: the sign observable is the operator rescaled by 1/sqrt(2).
  const Matrix m = kron(X(), X()) + kron(X(), Z());
  const Matrix expect = cdouble(1.0 / std::sqrt(2.0)) * m;
  CHECK(sign_observable(Hermitian(m)).mat().max_abs_diff(expect) < 1e-12);

  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix h = random_hermitian(6, rng);
    const Matrix g = sign_observable(Hermitian(h, 1e-10)).mat();
    CHECK((g * g).max_abs_diff(Matrix::identity(6)) < 1e-10);
    const double c = 0.1 + 5.0 * std::abs(random_hermitian(1, rng)(0, 0).real());
    const Matrix gc = sign_observable(Hermitian(cdouble(c) * h, 1e-8)).mat();
    CHECK(gc.max_abs_diff(g) < 1e-9);
  }
}

TEST_CASE("zero matrix sign observable is the identity") {
  const Matrix zero(3, 3);
  CHECK(sign_observable(Hermitian(zero)).mat().max_abs_diff(Matrix::identity(3)) < 1e-12);
}

TEST_CASE("trace_product examples") {
  CHECK(trace_product(Matrix::identity(4), Matrix::identity(4)) == cdouble(4.0));
  CHECK(trace_product(X(), Z()) == cdouble(0.0));
  CHECK_THROWS_AS(trace_product(Matrix(2, 3), Matrix(2, 3)), std::invalid_argument);

  std::mt19937_64 rng(17);
  const Matrix a = random_complex(3, 4, rng);
  const Matrix b = random_complex(4, 3, rng);
  CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < 1e-12);
}
