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

#include "porac/seesaw.hpp"

#include <bit>
#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "porac/pauli.hpp"

namespace porac {

namespace {

std::vector<std::uint32_t> inputs_of_parity(const Game& game, int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < game.inputs(); ++x)
    if ((std::popcount(x) & 1) == p) out.push_back(x);
  return out;
}

void orthonormalize_columns(Matrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cdouble overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < n; ++i) m(i, j) -= overlap * m(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12)
      throw std::runtime_error("orthonormalize_columns: rank-deficient basis");
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
}

Matrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cdouble(gauss(rng), gauss(rng));
  orthonormalize_columns(m);
  return m;
}

Matrix outer_from_column(const Matrix& basis, std::size_t col) {
  const std::size_t n = basis.rows();
  Matrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho(i, j) = basis(i, col) * std::conj(basis(j, col));
  return rho;
}

// -------- g = n path: two orthonormal bases --------

struct ChainWorkspace {
  std::vector<std::uint32_t> even_inputs;
  std::vector<std::uint32_t> odd_inputs;
  std::vector<Matrix> response;  // R_x = sum_y Pi_y^{x_y}, indexed by mask
};

ChainWorkspace make_workspace(const MeasurementSet& ms, const Game& game) {
  ChainWorkspace w;
  w.even_inputs = inputs_of_parity(game, 0);
  w.odd_inputs = inputs_of_parity(game, 1);
  w.response.resize(game.inputs(), Matrix(ms.dim, ms.dim));
  for (std::uint32_t x = 0; x < game.inputs(); ++x) {
    const BitString bx(game.n, x);
    Matrix r(ms.dim, ms.dim);
    for (int y = 1; y <= game.n; ++y) r += ms.proj(y, bx.bit(y));
    w.response[x] = std::move(r);
  }
  return w;
}

// One pairwise-rotation pass over a basis. Columns (i, j) are replaced by the
// orthonormal pair maximising <v_i|R_i|v_i> + <v_j|R_j|v_j> inside their span;
// the gain is the top eigenvalue shift of the restricted 2x2 problem.
double sweep_basis(Matrix& basis, const std::vector<std::uint32_t>& inputs,
                   const std::vector<Matrix>& response, double gain_tol) {
  const std::size_t dim = basis.rows();
  const std::size_t k = basis.cols();
  double total_gain = 0.0;
  std::vector<cdouble> ri_vi(dim), ri_vj(dim), rj_vi(dim), rj_vj(dim);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Matrix& mi = response[inputs[i]];
      const Matrix& mj = response[inputs[j]];
      for (std::size_t r = 0; r < dim; ++r) {
        cdouble accum_ii = 0.0, accum_ij = 0.0, accum_ji = 0.0, accum_jj = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
          accum_ii += mi(r, c) * basis(c, i);
          accum_ij += mi(r, c) * basis(c, j);
          accum_ji += mj(r, c) * basis(c, i);
          accum_jj += mj(r, c) * basis(c, j);
        }
        ri_vi[r] = accum_ii;
        ri_vj[r] = accum_ij;
        rj_vi[r] = accum_ji;
        rj_vj[r] = accum_jj;
      }
      auto dot = [&](const std::vector<cdouble>& w, std::size_t col) {
        cdouble s = 0.0;
        for (std::size_t r = 0; r < dim; ++r) s += std::conj(basis(r, col)) * w[r];
        return s;
      };
      // Restricted 2x2 forms of R_i and R_j on span{v_i, v_j}.
      const double mi00 = dot(ri_vi, i).real();
      const cdouble mi01 = dot(ri_vj, i);
      const double mi11 = [&] {
        cdouble s = 0.0;
        for (std::size_t r = 0; r < dim; ++r) s += std::conj(basis(r, j)) * ri_vj[r];
        return s.real();
      }();
      const double mj00 = dot(rj_vi, i).real();
      const cdouble mj01 = dot(rj_vj, i);
      const double mj11 = [&] {
        cdouble s = 0.0;
        for (std::size_t r = 0; r < dim; ++r) s += std::conj(basis(r, j)) * rj_vj[r];
        return s.real();
      }();

      const double a = mi00 - mj00;
      const double b = mi11 - mj11;
      const cdouble gamma = mi01 - mj01;
      const double mid = 0.5 * (a + b);
      const double rad = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(gamma));
      const double lam_max = mid + rad;
      const double current = mi00 + mj11;
      const double proposed = mj00 + mj11 + lam_max;
      const double gain = proposed - current;
      if (gain <= gain_tol) continue;

      cdouble u0, u1;
      if (std::abs(gamma) < 1e-15) {
        if (a >= b) continue;  // already optimal orientation
        u0 = 0.0;
        u1 = 1.0;
      } else {
        u0 = gamma;
        u1 = cdouble(lam_max - a);
        const double norm = std::sqrt(std::norm(u0) + std::norm(u1));
        u0 /= norm;
        u1 /= norm;
      }
      for (std::size_t r = 0; r < dim; ++r) {
        const cdouble vi = basis(r, i);
        const cdouble vj = basis(r, j);
        basis(r, i) = u0 * vi + u1 * vj;
        basis(r, j) = -std::conj(u1) * vi + std::conj(u0) * vj;
      }
      total_gain += gain;
    }
  }
  return total_gain;
}

double bases_objective(const AliceBases& bases, const ChainWorkspace& w, const Game& game) {
  double f = 0.0;
  for (std::size_t i = 0; i < w.even_inputs.size(); ++i)
    f += trace_product(outer_from_column(bases.even, i), w.response[w.even_inputs[i]]).real();
  for (std::size_t i = 0; i < w.odd_inputs.size(); ++i)
    f += trace_product(outer_from_column(bases.odd, i), w.response[w.odd_inputs[i]]).real();
  return f / (static_cast<double>(game.inputs()) * game.n);
}

// -------- (4,3) path: four blocks tied into a product frame --------

struct Axes {
  std::array<double, 3> a, b, c, d;  // unit vectors
};

Matrix axis_operator(const std::array<double, 3>& v, bool first_factor) {
  Matrix single(2, 2);
  single += cdouble(v[0]) * pauli_matrix(Pauli::X);
  single += cdouble(v[1]) * pauli_matrix(Pauli::Y);
  single += cdouble(v[2]) * pauli_matrix(Pauli::Z);
  const Matrix id2 = Matrix::identity(2);
  return first_factor ? kron(single, id2) : kron(id2, single);
}

std::array<double, 3> random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 3> v{};
  double norm = 0.0;
  do {
    for (double& e : v) e = gauss(rng);
    norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  } while (norm < 1e-8);
  for (double& e : v) e /= norm;
  return v;
}

EncodingSet encodings_from_axes(const Axes& axes, const Game& game) {
  // Block pairs: (a,c), (b,d), (a,d), (b,c); A-side on factor one, the primed
  // side on factor two, which makes all four parity relations operator
  // identities.
  const std::array<Matrix, 4> a_ops = {axis_operator(axes.a, true), axis_operator(axes.b, true),
                                       axis_operator(axes.a, true), axis_operator(axes.b, true)};
  const std::array<Matrix, 4> ap_ops = {axis_operator(axes.c, false), axis_operator(axes.d, false),
                                        axis_operator(axes.d, false), axis_operator(axes.c, false)};
  EncodingSet enc;
  enc.n = game.n;
  enc.dim = 4;
  enc.states.resize(game.inputs());
  const Matrix id = Matrix::identity(4);
  for (std::uint32_t x = 0; x < game.inputs(); ++x) {
    const BitString bx(game.n, x);
    const int row = bx.bit(1) ^ bx.bit(2);
    const int col = bx.bit(3) ^ bx.bit(4);
    const int block = (row == 0 && col == 0) ? 0 : (row == 1 && col == 1) ? 1
                      : (row == 0 && col == 1) ? 2 : 3;
    const double s1 = bx.bit(1) ? -1.0 : 1.0;
    const double s3 = bx.bit(3) ? -1.0 : 1.0;
    Matrix p1 = cdouble(0.5) * (id + cdouble(s1) * a_ops[block]);
    Matrix p2 = cdouble(0.5) * (id + cdouble(s3) * ap_ops[block]);
    enc.states[x] = p1 * p2;
  }
  return enc;
}

Axes axes_update(const MeasurementSet& ms, const Axes& old) {
  std::array<Matrix, 4> bob;
  for (int y = 1; y <= 4; ++y) bob[y - 1] = ms.proj(y, 0) - ms.proj(y, 1);
  const Matrix m_a = bob[0] + bob[1];
  const Matrix m_b = bob[0] - bob[1];
  const Matrix m_c = bob[2] + bob[3];
  const Matrix m_d = bob[2] - bob[3];

  auto best_axis = [](const Matrix& m, bool first_factor,
                      const std::array<double, 3>& fallback) {
    std::array<double, 3> v{};
    const std::array<Pauli, 3> paulis = {Pauli::X, Pauli::Y, Pauli::Z};
    double norm = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Matrix id2 = Matrix::identity(2);
      const Matrix probe = first_factor ? kron(pauli_matrix(paulis[k]), id2)
                                        : kron(id2, pauli_matrix(paulis[k]));
      v[k] = trace_product(probe, m).real();
      norm += v[k] * v[k];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-14) return fallback;
    for (double& e : v) e /= norm;
    return v;
  };

  Axes next;
  next.a = best_axis(m_a, true, old.a);
  next.b = best_axis(m_b, true, old.b);
  next.c = best_axis(m_c, false, old.c);
  next.d = best_axis(m_d, false, old.d);
  return next;
}

// -------- restart drivers --------

struct RestartOutcome {
  QuantumStrategy strategy;
  double value = -1.0;
  bool converged = false;
  std::vector<double> log;
};

RestartOutcome run_chain_restart(const Game& game, const SeesawOptions& opt,
                                 std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  const std::size_t dim = opt.dim;
  AliceBases bases{random_unitary(dim, rng), random_unitary(dim, rng)};

  RestartOutcome out;
  double prev = -1.0;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    EncodingSet enc = encodings_from_bases(bases, game);
    MeasurementSet ms = optimal_bob(enc, game);
    AliceUpdate upd = optimal_alice(ms, game, bases);
    bases = upd.bases;
    out.log.push_back(upd.objective);
    if (prev >= 0.0 && upd.objective - prev < opt.tol) {
      out.converged = true;
      prev = upd.objective;
      break;
    }
    prev = upd.objective;
  }
  orthonormalize_columns(bases.even);
  orthonormalize_columns(bases.odd);
  out.strategy.encodings = encodings_from_bases(bases, game);
  out.strategy.measurements = optimal_bob(out.strategy.encodings, game);
  out.value = success_probability(out.strategy, game);
  return out;
}

RestartOutcome run_blocks_restart(const Game& game, const SeesawOptions& opt,
                                  std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  Axes axes{random_axis(rng), random_axis(rng), random_axis(rng), random_axis(rng)};

  RestartOutcome out;
  double prev = -1.0;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    EncodingSet enc = encodings_from_axes(axes, game);
    MeasurementSet ms = optimal_bob(enc, game);
    axes = axes_update(ms, axes);
    EncodingSet enc2 = encodings_from_axes(axes, game);
    const double value = success_probability({enc2, ms}, game);
    out.log.push_back(value);
    if (prev >= 0.0 && value - prev < opt.tol) {
      out.converged = true;
      prev = value;
      break;
    }
    prev = value;
  }
  out.strategy.encodings = encodings_from_axes(axes, game);
  out.strategy.measurements = optimal_bob(out.strategy.encodings, game);
  out.value = success_probability(out.strategy, game);
  return out;
}

}  // namespace

EncodingSet encodings_from_bases(const AliceBases& bases, const Game& game) {
  const std::size_t dim = bases.even.rows();
  EncodingSet enc;
  enc.n = game.n;
  enc.dim = dim;
  enc.states.resize(game.inputs());
  const auto even = inputs_of_parity(game, 0);
  const auto odd = inputs_of_parity(game, 1);
  if (even.size() != bases.even.cols() || odd.size() != bases.odd.cols())
    throw std::invalid_argument("encodings_from_bases: basis has wrong column count");
  for (std::size_t i = 0; i < even.size(); ++i)
    enc.states[even[i]] = outer_from_column(bases.even, i);
  for (std::size_t i = 0; i < odd.size(); ++i)
    enc.states[odd[i]] = outer_from_column(bases.odd, i);
  return enc;
}

AliceBases bases_from_encodings(const EncodingSet& enc, const Game& game) {
  const auto even = inputs_of_parity(game, 0);
  const auto odd = inputs_of_parity(game, 1);
  AliceBases bases{Matrix(enc.dim, even.size()), Matrix(enc.dim, odd.size())};
  auto fill = [&](Matrix& basis, const std::vector<std::uint32_t>& inputs) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const EigenDecomposition e = hermitian_eig(Hermitian(enc.state(inputs[i]), 1e-8));
      if (e.eigenvalues.back() < 1.0 - 1e-6)
        throw std::invalid_argument("bases_from_encodings: state is not rank one");
      for (std::size_t r = 0; r < enc.dim; ++r)
        basis(r, i) = e.vectors(r, enc.dim - 1);
    }
  };
  fill(bases.even, even);
  fill(bases.odd, odd);
  return bases;
}

AliceUpdate optimal_alice(const MeasurementSet& ms, const Game& game, const AliceBases& start,
                          int max_sweeps, double gain_tol) {
  if (game.g != game.n)
    throw std::invalid_argument(
        "optimal_alice: the orthonormal-bases ansatz needs g = n (single parity element); "
        "other games go through seesaw's block ansatz");
  const ChainWorkspace w = make_workspace(ms, game);
  AliceUpdate out;
  out.bases = start;
  bool improved = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double gain = sweep_basis(out.bases.even, w.even_inputs, w.response, gain_tol);
    gain += sweep_basis(out.bases.odd, w.odd_inputs, w.response, gain_tol);
    if (gain > gain_tol) improved = true;
    if (gain <= gain_tol) break;
  }
  orthonormalize_columns(out.bases.even);
  orthonormalize_columns(out.bases.odd);
  out.objective = bases_objective(out.bases, w, game);
  out.improved = improved;
  return out;
}

SeesawResult seesaw(const Game& game, const SeesawOptions& options) {
  SeesawOptions opt = options;
  const bool blocks = (game.n == 4 && game.g == 3);
  const std::size_t natural_dim = std::size_t{1} << (game.g - 1);
  if (opt.dim == 0) opt.dim = natural_dim;
  if (blocks) {
    if (opt.dim != 4)
      throw std::invalid_argument("seesaw: the (4,3) block ansatz is two-qubit (dim 4)");
  } else if (game.g == game.n) {
    if (opt.dim != natural_dim)
      throw std::invalid_argument(
          "seesaw: the orthonormal-bases ansatz needs dim = 2^{n-1} so each parity class "
          "forms a full basis");
  } else {
    throw std::invalid_argument(
        "seesaw: no parity-oblivious ansatz for n=" + std::to_string(game.n) +
        ", g=" + std::to_string(game.g) + "; supported games are g=n and (4,3)");
  }
  if (opt.restarts < 1) throw std::invalid_argument("seesaw: restarts must be >= 1");

  std::vector<RestartOutcome> outcomes(opt.restarts);
  auto run_one = [&](int r) {
    const std::uint64_t s = mix_seed(opt.seed, static_cast<std::uint64_t>(r));
    outcomes[r] = blocks ? run_blocks_restart(game, opt, s) : run_chain_restart(game, opt, s);
  };
  if (opt.exec == Exec::serial) {
    for (int r = 0; r < opt.restarts; ++r) run_one(r);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < opt.restarts; ++r) run_one(r);
  }

  SeesawResult result;
  result.trace_log.reserve(outcomes.size());
  for (int r = 0; r < opt.restarts; ++r) {
    result.trace_log.push_back(outcomes[r].log);
    result.all_converged = result.all_converged && outcomes[r].converged;
    if (outcomes[r].value > result.value || result.best_restart < 0) {
      result.value = outcomes[r].value;
      result.best_restart = r;
    }
  }
  result.best = std::move(outcomes[result.best_restart].strategy);
  result.po_violation = encoding_po_violation(result.best.encodings, game.parity_set);
  if (result.po_violation > 1e-8)
    throw std::runtime_error("seesaw: optimiser produced encodings violating the parity "
                             "identities; ansatz invariant broken");
  return result;
}

}  // namespace porac
