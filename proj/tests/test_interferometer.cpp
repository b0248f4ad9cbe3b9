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
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "porac/interferometer.hpp"
#include "porac/pauli.hpp"

using namespace porac;

namespace {

constexpr double kPi = std::numbers::pi;

double vector_norm(const Matrix& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.rows(); ++i) s += std::norm(v(i, 0));
  return std::sqrt(s);
}

double fidelity(const Matrix& a, const Matrix& b) {
  cdouble overlap = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) overlap += std::conj(a(i, 0)) * b(i, 0);
  return std::norm(overlap);
}

}  // namespace

TEST_CASE("prepare_state at phi1 = pi/2, theta = 0") {
  const Matrix psi = prepare_state({kPi / 2.0, 0.0});
  // (|0> - |1>)/sqrt(2) (x) |0>.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psi(0, 0) - cdouble(inv_sqrt2)) < 1e-15);
  CHECK(std::abs(psi(1, 0)) < 1e-15);
  CHECK(std::abs(psi(2, 0) + cdouble(inv_sqrt2)) < 1e-15);
  CHECK(std::abs(psi(3, 0)) < 1e-15);
}

TEST_CASE("prepare_state at phi1 = 3pi/2, theta = pi/4") {
  const Matrix psi = prepare_state({3.0 * kPi / 2.0, kPi / 4.0});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(psi(i, 0) - cdouble(0.5)) < 1e-15);
}

TEST_CASE("the eight reference settings are distinct unit states") {
  const auto settings = reference_settings();
  REQUIRE(settings.size() == 8);
  std::vector<Matrix> states;
  for (const auto& s : settings) {
    states.push_back(prepare_state(s));
    CHECK(std::abs(vector_norm(states.back()) - 1.0) < 1e-14);
  }
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) CHECK(fidelity(states[i], states[j]) < 1.0 - 1e-6);
}

TEST_CASE("each phi1 group splits into two orthogonal polarisation bases") {
  const auto settings = reference_settings();
  // Within one phi1 group: theta in {0, pi/2} orthogonal pair, {pi/4, 3pi/4}
  // orthogonal pair, and cross overlaps 1/2.
  for (int base : {0, 4}) {
    const Matrix t0 = prepare_state(settings[base + 0]);
    const Matrix t90 = prepare_state(settings[base + 1]);
    const Matrix t45 = prepare_state(settings[base + 2]);
    const Matrix t135 = prepare_state(settings[base + 3]);
    CHECK(fidelity(t0, t90) < 1e-14);
    CHECK(fidelity(t45, t135) < 1e-14);
    CHECK(fidelity(t0, t45) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(fidelity(t90, t135) == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("path_observable reproduces sigma_z and -sigma_x") {
  const Hermitian z = path_observable({1.0, 0.0, 0.7});
  CHECK(z.mat().max_abs_diff(pauli_matrix(Pauli::Z)) == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  const Hermitian mx = path_observable({r, r, kPi / 2.0});
  const Matrix minus_x = cdouble(-1.0) * pauli_matrix(Pauli::X);
  CHECK(mx.mat().max_abs_diff(minus_x) < 1e-15);

  const Hermitian my = path_observable({r, r, 0.0});
  const Matrix minus_y = cdouble(-1.0) * pauli_matrix(Pauli::Y);
  CHECK(my.mat().max_abs_diff(minus_y) < 1e-15);
}

TEST_CASE("path_observable squares to the identity for real settings") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int rep = 0; rep < 25; ++rep) {
    const double a = std::cos(angle(rng));
    const double b = std::sqrt(1.0 - a * a);
    const Hermitian p = path_observable({a, b, angle(rng)});
    CHECK((p.mat() * p.mat()).max_abs_diff(Matrix::identity(2)) < 1e-12);
  }
  CHECK_THROWS_AS(path_observable({1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("reference settings match the explicit encodings perfectly") {
  const MatchResult match = match_encodings(reference_settings(), Game(3, 3));
  CHECK(match.ok);
  CHECK(match.min_fidelity > 1.0 - 1e-12);
  REQUIRE(match.bijection.size() == 8);
  // Every input appears exactly once.
  std::set<std::uint32_t> inputs;
  for (const auto& [setting, mask] : match.bijection) inputs.insert(mask);
  CHECK(inputs.size() == 8);
}

TEST_CASE("match is invariant under global phases") {
  // A global phase on the prepared state leaves every fidelity unchanged;
  // shifting phi1 by 2 pi realises exactly that.
  auto settings = reference_settings();
  for (auto& s : settings) s.phi1 += 2.0 * kPi;
  const MatchResult match = match_encodings(settings, Game(3, 3));
  CHECK(match.ok);
  CHECK(match.min_fidelity > 1.0 - 1e-12);
}

TEST_CASE("perturbed settings are reported as a mismatch") {
  auto settings = reference_settings();
  for (auto& s : settings) s.theta += 0.3;
  const MatchResult match = match_encodings(settings, Game(3, 3));
  CHECK_FALSE(match.ok);
  CHECK(match.min_fidelity < 1.0 - 1e-3);
}

TEST_CASE("duplicate settings are rejected") {
  auto settings = reference_settings();
  settings[1] = settings[0];
  CHECK_THROWS_WITH_AS(match_encodings(settings, Game(3, 3)), doctest::Contains("bijection"),
                       std::invalid_argument);
}
