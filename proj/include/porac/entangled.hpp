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

#ifndef PORAC_ENTANGLED_HPP
#define PORAC_ENTANGLED_HPP

#include "porac/quantum.hpp"

namespace porac {

/// Shared state on dimA (x) dimB, A-major index (i = a*dimB + b).
struct BipartiteState {
  std::size_t dimA = 0;
  std::size_t dimB = 0;
  Matrix density;
};

/// Two maximally entangled qubit pairs. Alice holds the first qubit of each
/// pair; tensor factors are ordered (A1, A2, B1, B2), so her half is the
/// leading 4-dimensional factor.
BipartiteState phi_plus_pair();

Matrix partial_trace_A(const Matrix& m, std::size_t dimA, std::size_t dimB);

struct SteerResult {
  Matrix steered;      // unnormalised conditional state on Bob's side
  double weight = 0.0; // its trace
};

/// Alice measures the commuting pair of x's set with outcomes matching x's
/// sign pattern; returns Bob's (unnormalised) conditional state.
SteerResult steer(const BipartiteState& state, const ObservableFamily& fam, const BitString& x);

/// All steered states, normalised, as an encoding set on Bob's side.
EncodingSet steered_encoding(const BipartiteState& state, const ObservableFamily& fam,
                             const Game& game);

struct BellResult {
  double expectation = 0.0;
  double success = 0.0;  // 1/2 + expectation / 12
};

/// Expectation of (A1+A2) (x) B_1 + (T1-T2) (x) B_3 + 2 S1 (x) B_2 in the
/// shared state. Works for any dimA/dimB with valid +/-1 observables.
BellResult bell_value(const BipartiteState& state, const ObservableFamily& fam,
                      const std::vector<Matrix>& bobs);

struct TwoBitResult {
  double success = 0.0;
  Channel induced;  // Alice's message distribution p(m|x)
};

/// Exact expectation of the two-bit communication protocol: Alice measures
/// her pair, sends the two-bit offset between her input and the steered
/// branch, and Bob flips his outcome labels by (m1, m2, m1^m2). With
/// `apply_message_correction` false Bob ignores the message (baseline check).
TwoBitResult two_bit_protocol(const BipartiteState& state, const ObservableFamily& fam,
                              const MeasurementSet& bobs,
                              bool apply_message_correction = true);

}  // namespace porac

#endif  // PORAC_ENTANGLED_HPP
