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

#include "porac/quantum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace porac {

namespace {

Matrix joint_eigenprojector(const ObservableFamily& fam, const BitString& x) {
  const auto& gens = fam.sets[fam.set_index(x)].generators;
  const Matrix id = Matrix::identity(fam.dim);
  Matrix rho = id;
  for (const auto& [label, y] : gens) {
    const double sign = x.bit(y) ? -1.0 : 1.0;
    Matrix proj = id + cdouble(sign) * fam.obs(label);
    proj *= cdouble(0.5);
    rho = rho * proj;
  }
  return rho;
}

EncodingSet build_states(const ObservableFamily& fam, const Game& game, Exec exec) {
  if (fam.n != game.n)
    throw std::invalid_argument("states_from_family: family and game sizes differ");
  EncodingSet enc;
  enc.n = game.n;
  enc.dim = fam.dim;
  enc.states.resize(game.inputs());
  const long long count = static_cast<long long>(game.inputs());
  if (exec == Exec::serial) {
    for (long long x = 0; x < count; ++x)
      enc.states[x] = joint_eigenprojector(fam, BitString(game.n, static_cast<std::uint32_t>(x)));
  } else {
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < count; ++x)
      enc.states[x] = joint_eigenprojector(fam, BitString(game.n, static_cast<std::uint32_t>(x)));
  }
  return enc;
}

}  // namespace

MeasurementSet measurements_from_observables(const std::vector<Matrix>& bobs) {
  MeasurementSet ms;
  if (bobs.empty()) throw std::invalid_argument("measurements_from_observables: empty list");
  ms.dim = bobs[0].rows();
  const Matrix id = Matrix::identity(ms.dim);
  for (const Matrix& b : bobs) {
    Matrix pi0 = cdouble(0.5) * (id + b);
    Matrix pi1 = cdouble(0.5) * (id - b);
    ms.pi.emplace_back(std::move(pi0), std::move(pi1));
  }
  validate_measurements(ms);
  return ms;
}

void validate_measurements(MeasurementSet& ms, double tol) {
  const Matrix id = Matrix::identity(ms.dim);
  ms.projective = true;
  for (std::size_t i = 0; i < ms.pi.size(); ++i) {
    const auto& [p0, p1] = ms.pi[i];
    if ((p0 + p1).max_abs_diff(id) > 1e-12)
      throw std::invalid_argument("measurements: pair " + std::to_string(i + 1) +
                                  " does not sum to identity");
    for (const Matrix* p : {&p0, &p1}) {
      if (p->hermiticity_defect() > tol)
        throw std::invalid_argument("measurements: effect not Hermitian");
      const EigenDecomposition e = hermitian_eig(Hermitian(*p, tol));
      if (e.eigenvalues.front() < -1e-10)
        throw std::invalid_argument("measurements: effect not positive semidefinite");
      if ((*p * *p).max_abs_diff(*p) > tol) ms.projective = false;
    }
  }
}

EncodingSet states_from_family_unchecked(const ObservableFamily& fam, const Game& game,
                                         Exec exec) {
  return build_states(fam, game, exec);
}

EncodingSet states_from_family(const ObservableFamily& fam, const Game& game, Exec exec) {
  EncodingSet enc = build_states(fam, game, exec);

  const EncodingQuality q = encoding_quality(enc);
  if (q.hermiticity > 1e-12 || q.trace > 1e-12)
    throw std::runtime_error(
        "states_from_family: generators do not produce unit-trace states "
        "(inconsistent sign pattern; trace defect " + std::to_string(q.trace) + ")");
  if (q.psd > 1e-10 || q.purity > 1e-10)
    throw std::runtime_error(
        "states_from_family: states are not pure projectors (family product "
        "constraints contradict the sign pattern)");

  const double po = encoding_po_violation(enc, game.parity_set);
  if (po > 1e-10)
    throw std::runtime_error(
        "states_from_family: encodings violate the parity-oblivious identity, "
        "max entrywise deviation " + std::to_string(po) +
        " (this observable family does not satisfy the parity relations)");
  return enc;
}

double encoding_po_violation(const EncodingSet& enc, const ParitySet& ps) {
  if (enc.n != ps.n)
    throw std::invalid_argument("encoding_po_violation: length mismatch");
  double worst = 0.0;
  for (std::uint32_t s : ps.elements) {
    Matrix diff(enc.dim, enc.dim);
    for (std::uint32_t x = 0; x < (1u << enc.n); ++x) {
      const double sign = (std::popcount(s & x) & 1) ? -1.0 : 1.0;
      diff += cdouble(sign) * enc.states[x];
    }
    worst = std::max(worst, diff.max_abs());
  }
  return worst;
}

EncodingQuality encoding_quality(const EncodingSet& enc) {
  EncodingQuality q;
  double hermiticity = 0.0, trace = 0.0, psd = 0.0, purity = 0.0;
  const long long count = static_cast<long long>(enc.states.size());
#pragma omp parallel for schedule(static) \
    reduction(max : hermiticity, trace, psd, purity)
  for (long long i = 0; i < count; ++i) {
    const Matrix& rho = enc.states[i];
    hermiticity = std::max(hermiticity, rho.hermiticity_defect());
    trace = std::max(trace, std::abs(rho.trace() - cdouble(1.0)));
    purity = std::max(purity, std::abs(trace_product(rho, rho) - cdouble(1.0)));
    const EigenDecomposition e = hermitian_eig(Hermitian(rho, 1e-8));
    psd = std::max(psd, std::max(0.0, -e.eigenvalues.front()));
  }
  q.hermiticity = hermiticity;
  q.trace = trace;
  q.psd = psd;
  q.purity = purity;
  return q;
}

double success_probability(const QuantumStrategy& strategy, const Game& game) {
  const EncodingSet& enc = strategy.encodings;
  const MeasurementSet& ms = strategy.measurements;
  if (enc.n != game.n || ms.pi.size() != static_cast<std::size_t>(game.n) || enc.dim != ms.dim)
    throw std::invalid_argument("success_probability: dimension mismatch");
  double total = 0.0;
  for (std::uint32_t x = 0; x < game.inputs(); ++x) {
    const BitString bx(game.n, x);
    for (int y = 1; y <= game.n; ++y)
      total += trace_product(enc.state(x), ms.proj(y, bx.bit(y))).real();
  }
  return total / (static_cast<double>(game.inputs()) * game.n);
}

DeltaResult assemble_delta(const Game& game, const ObservableFamily& fam,
                           const std::vector<Matrix>& bobs) {
  if (bobs.size() != static_cast<std::size_t>(game.n))
    throw std::invalid_argument("assemble_delta: need one Bob observable per index y");
  const Matrix id = Matrix::identity(fam.dim);
  for (const Matrix& b : bobs) {
    if (b.rows() != fam.dim || b.cols() != fam.dim)
      throw std::invalid_argument("assemble_delta: Bob observable has wrong dimension");
    if ((b * b).max_abs_diff(id) > 1e-10)
      throw std::invalid_argument("assemble_delta: Bob observable does not square to identity");
  }
  const std::vector<Matrix> combos = alice_combinations(fam);
  Matrix delta(fam.dim, fam.dim);
  for (std::size_t y = 0; y < combos.size(); ++y) {
    // Jordan product: same trace as C_y B_y, Hermitian for any Bob choice.
    Matrix sym = combos[y] * bobs[y] + bobs[y] * combos[y];
    sym *= cdouble(0.5);
    delta += sym;
  }
  DeltaResult out{Hermitian(delta, 1e-9), 0.0};
  out.trace = delta.trace().real();
  return out;
}

MeasurementSet optimal_bob(const EncodingSet& enc, const Game& game) {
  if (enc.n != game.n) throw std::invalid_argument("optimal_bob: dimension mismatch");
  std::vector<Matrix> bobs;
  for (int y = 1; y <= game.n; ++y) {
    Matrix c(enc.dim, enc.dim);
    for (std::uint32_t x = 0; x < game.inputs(); ++x) {
      const double sign = (x >> (y - 1)) & 1u ? -1.0 : 1.0;
      c += cdouble(sign) * enc.state(x);
    }
    bobs.push_back(sign_observable(Hermitian(c, 1e-8)).mat());
  }
  return measurements_from_observables(bobs);
}

std::vector<Matrix> canonical_bob_observables(const ObservableFamily& fam) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> bobs;
  if (!fam.four_blocks) {
    bobs.push_back(cdouble(inv_sqrt2) * (fam.obs("A1") + fam.obs("A2")));
    for (int k = 1; k <= fam.n - 2; ++k) bobs.push_back(fam.obs("S" + std::to_string(k)));
    bobs.push_back(cdouble(inv_sqrt2) * (fam.obs("T1") - fam.obs("T2")));
    return bobs;
  }
  // Four-block shape: normalise each Alice combination by its flat spectral
  // value sqrt(2)*2 when the pairs anticommute; fall back to the sign
  // observable otherwise (covers the omega_reference variant).
  for (const Matrix& c : alice_combinations(fam)) {
    const Matrix c2 = c * c;
    const double top = c2(0, 0).real();
    bool flat = top > 1e-12;
    if (flat)
      flat = c2.max_abs_diff(cdouble(top) * Matrix::identity(fam.dim)) <= 1e-10;
    if (flat)
      bobs.push_back(cdouble(1.0 / std::sqrt(top)) * c);
    else
      bobs.push_back(sign_observable(Hermitian(c)).mat());
  }
  return bobs;
}

QuantumStrategy explicit_strategy(const Game& game, Exec exec) {
  const ObservableFamily fam = build_family(game.n, game.g);
  QuantumStrategy strat;
  strat.encodings = states_from_family(fam, game, exec);
  strat.measurements = measurements_from_observables(canonical_bob_observables(fam));
  return strat;
}

double success_from_delta_trace(double trace, const Game& game) {
  return 0.5 + trace / (std::pow(2.0, game.n + 1) * game.n);
}

}  // namespace porac
