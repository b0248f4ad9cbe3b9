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

#ifndef PORAC_SEESAW_HPP
#define PORAC_SEESAW_HPP

#include <cstdint>
#include <vector>

#include "porac/quantum.hpp"

namespace porac {

/// Alice ansatz for single-parity-element games: one orthonormal basis for
/// the even-parity inputs and one for the odd-parity inputs (each basis sums
/// to the identity, so the parity-oblivious identity holds by construction).
/// Column i of each basis is the state of the i-th input of that parity in
/// ascending mask order.
struct AliceBases {
  Matrix even;
  Matrix odd;
};

EncodingSet encodings_from_bases(const AliceBases& bases, const Game& game);

/// Recovers the bases from a rank-1 encoding set (principal eigenvectors).
AliceBases bases_from_encodings(const EncodingSet& enc, const Game& game);

struct AliceUpdate {
  AliceBases bases;
  double objective = 0.0;  // success probability after the sweeps
  bool improved = false;
};

/// Monotone Alice half-step for fixed measurements: deterministic pairwise
/// rotation sweeps within each basis (lexicographic pair order), accepting a
/// rotation only when the objective gain exceeds gain_tol. Only defined for
/// g = n games; the (4,3) game goes through seesaw's block ansatz.
AliceUpdate optimal_alice(const MeasurementSet& ms, const Game& game, const AliceBases& start,
                          int max_sweeps = 64, double gain_tol = 1e-12);

struct SeesawOptions {
  std::size_t dim = 0;  // 0 -> the game's natural dimension 2^{g-1}
  int restarts = 20;
  int max_iter = 200;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  Exec exec = Exec::parallel;
};

struct SeesawResult {
  QuantumStrategy best;
  double value = 0.0;
  int best_restart = -1;
  bool all_converged = true;                   // every restart met tol within max_iter
  double po_violation = 0.0;                   // operator-identity check on the best encodings
  std::vector<std::vector<double>> trace_log;  // per restart, per iteration
};

/// Alternating optimisation of encodings and measurements from seeded random
/// starts. Supported games: g = n (orthonormal-bases ansatz) and (4,3) (one
/// orthonormal basis per commuting block, blocks tied so the four weight-3
/// parity identities hold exactly; verified to 1e-8 on the result). The
/// outcome is deterministic given (restarts, seed) for any Exec policy and
/// thread count; ties between restarts resolve to the lower restart index.
SeesawResult seesaw(const Game& game, const SeesawOptions& options);

}  // namespace porac

#endif  // PORAC_SEESAW_HPP
