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

#include "porac/entangled.hpp"

#include <cmath>
#include <stdexcept>

namespace porac {

BipartiteState phi_plus_pair() {
  // psi = (1/2) sum_{i,j} |i j>_A |i j>_B in (A1, A2, B1, B2) factor order.
  Matrix psi(16, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const std::size_t a = static_cast<std::size_t>(i) * 2 + j;
      const std::size_t b = static_cast<std::size_t>(i) * 2 + j;
      psi(a * 4 + b, 0) = 0.5;
    }
  BipartiteState state;
  state.dimA = 4;
  state.dimB = 4;
  state.density = psi * psi.adjoint();
  return state;
}

Matrix partial_trace_A(const Matrix& m, std::size_t dimA, std::size_t dimB) {
  if (m.rows() != dimA * dimB || m.cols() != dimA * dimB)
    throw std::invalid_argument("partial_trace_A: dimension mismatch");
  Matrix out(dimB, dimB);
  for (std::size_t j = 0; j < dimB; ++j)
    for (std::size_t jp = 0; jp < dimB; ++jp) {
      cdouble s = 0.0;
      for (std::size_t i = 0; i < dimA; ++i) s += m(i * dimB + j, i * dimB + jp);
      out(j, jp) = s;
    }
  return out;
}

namespace {

// Joint projector of Alice's commuting pair for input x: the two generators
// with outcome signs (-1)^{x_1} and (-1)^{x_2}.
Matrix alice_projector(const ObservableFamily& fam, const BitString& x) {
  const auto& gens = fam.sets[fam.set_index(x)].generators;
  const Matrix id = Matrix::identity(fam.dim);
  Matrix q = id;
  for (const auto& [label, y] : gens) {
    const double sign = x.bit(y) ? -1.0 : 1.0;
    Matrix proj = cdouble(0.5) * (id + cdouble(sign) * fam.obs(label));
    q = q * proj;
  }
  return q;
}

}  // namespace

SteerResult steer(const BipartiteState& state, const ObservableFamily& fam, const BitString& x) {
  if (fam.dim != state.dimA)
    throw std::invalid_argument("steer: family dimension does not match Alice's side");
  const Matrix q = alice_projector(fam, x);
  const Matrix op = kron(q, Matrix::identity(state.dimB));
  SteerResult out{partial_trace_A(op * state.density, state.dimA, state.dimB), 0.0};
  out.weight = out.steered.trace().real();
  return out;
}

EncodingSet steered_encoding(const BipartiteState& state, const ObservableFamily& fam,
                             const Game& game) {
  EncodingSet enc;
  enc.n = game.n;
  enc.dim = state.dimB;
  enc.states.resize(game.inputs());
  for (std::uint32_t x = 0; x < game.inputs(); ++x) {
    SteerResult s = steer(state, fam, BitString(game.n, x));
    if (s.weight < 1e-12)
      throw std::runtime_error("steered_encoding: branch has vanishing weight");
    enc.states[x] = cdouble(1.0 / s.weight) * s.steered;
  }
  return enc;
}

BellResult bell_value(const BipartiteState& state, const ObservableFamily& fam,
                      const std::vector<Matrix>& bobs) {
  if (bobs.size() != 3) throw std::invalid_argument("bell_value: need three Bob observables");
  const Matrix idB = Matrix::identity(state.dimB);
  for (const Matrix& b : bobs)
    if (b.rows() != state.dimB || (b * b).max_abs_diff(idB) > 1e-10)
      throw std::invalid_argument("bell_value: Bob observable invalid");
  const Matrix idA = Matrix::identity(state.dimA);
  for (const char* label : {"A1", "A2", "S1", "T1", "T2"})
    if ((fam.obs(label) * fam.obs(label)).max_abs_diff(idA) > 1e-10)
      throw std::invalid_argument("bell_value: Alice observable invalid");

  Matrix bell = kron(fam.obs("A1") + fam.obs("A2"), bobs[0]);
  bell += kron(cdouble(2.0) * fam.obs("S1"), bobs[1]);
  bell += kron(fam.obs("T1") - fam.obs("T2"), bobs[2]);
  BellResult out;
  out.expectation = trace_product(state.density, bell).real();
  out.success = 0.5 + out.expectation / 12.0;
  return out;
}

TwoBitResult two_bit_protocol(const BipartiteState& state, const ObservableFamily& fam,
                              const MeasurementSet& bobs, bool apply_message_correction) {
  if (fam.n != 3)
    throw std::invalid_argument("two_bit_protocol: defined for the 3-bit single-element game");
  if (bobs.dim != state.dimB)
    throw std::invalid_argument("two_bit_protocol: measurement dimension mismatch");
  const Game game(3, 3);

  double total = 0.0;
  std::vector<double> message_probs(8 * 4, 0.0);
  for (std::uint32_t x = 0; x < 8; ++x) {
    const BitString bx(3, x);
    const int par = bx.weight() & 1;
    for (int o1 = 0; o1 < 2; ++o1) {
      for (int o2 = 0; o2 < 2; ++o2) {
        // Branch input: the set member consistent with Alice's outcomes.
        const int b3 = par ^ o1 ^ o2;
        const std::uint32_t xt = static_cast<std::uint32_t>(o1 | (o2 << 1) | (b3 << 2));
        SteerResult s = steer(state, fam, BitString(3, xt));
        if (s.weight <= 1e-15) continue;
        const Matrix rho = cdouble(1.0 / s.weight) * s.steered;

        const int m1 = bx.bit(1) ^ o1;
        const int m2 = bx.bit(2) ^ o2;
        const int message = m1 | (m2 << 1);
        message_probs[x * 4 + message] += s.weight;

        int corr[3] = {m1, m2, m1 ^ m2};
        if (!apply_message_correction) corr[0] = corr[1] = corr[2] = 0;
        double branch = 0.0;
        for (int y = 1; y <= 3; ++y)
          branch += trace_product(rho, bobs.proj(y, bx.bit(y) ^ corr[y - 1])).real();
        total += s.weight * branch;
      }
    }
  }

  TwoBitResult out{total / 24.0, Channel::from_doubles(3, 4, message_probs)};
  return out;
}

}  // namespace porac
