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

#ifndef PORAC_QUANTUM_HPP
#define PORAC_QUANTUM_HPP

#include <utility>
#include <vector>

#include "porac/eig.hpp"
#include "porac/exec.hpp"
#include "porac/family.hpp"
#include "porac/game.hpp"
#include "porac/matrix.hpp"

namespace porac {

/// Density matrices indexed by input mask.
struct EncodingSet {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> states;  // [x]

  const Matrix& state(std::uint32_t x) const { return states[x]; }
};

/// Binary measurements, one (Pi0, Pi1) pair per index y = 1..n.
struct MeasurementSet {
  std::size_t dim = 0;
  std::vector<std::pair<Matrix, Matrix>> pi;  // [y-1]
  bool projective = true;

  const Matrix& proj(int y, int b) const { return b == 0 ? pi[y - 1].first : pi[y - 1].second; }
};

struct QuantumStrategy {
  EncodingSet encodings;
  MeasurementSet measurements;
};

/// Builds a +/-1 observable B into the projector pair ((I+B)/2, (I-B)/2).
MeasurementSet measurements_from_observables(const std::vector<Matrix>& bobs);

/// Validates a MeasurementSet: completeness within 1e-12; each effect
/// Hermitian and PSD; sets `projective` from idempotency within tol.
void validate_measurements(MeasurementSet& ms, double tol = 1e-10);

/// Joint-eigenprojector encodings: state for input x is the product of
/// (I + (-1)^{x_y} O)/2 over the generators (O, y) of x's commuting set.
/// Validates the full encoding contract: Hermitian, unit trace, PSD, purity,
/// and the parity-oblivious operator identity for every parity element.
/// Throws with a diagnostic naming the offending check otherwise.
EncodingSet states_from_family(const ObservableFamily& fam, const Game& game,
                               Exec exec = Exec::parallel);

/// Same construction without the parity-oblivious check; used to inspect and
/// report the violation of a family whose encodings are not oblivious.
EncodingSet states_from_family_unchecked(const ObservableFamily& fam, const Game& game,
                                         Exec exec = Exec::parallel);

/// Max entrywise deviation of sum_{x.s=0} rho_x - sum_{x.s=1} rho_x over s.
double encoding_po_violation(const EncodingSet& enc, const ParitySet& ps);

/// State-quality diagnostics: worst deviations from Hermitian / unit trace /
/// PSD / purity over the whole set.
struct EncodingQuality {
  double hermiticity = 0.0;
  double trace = 0.0;
  double psd = 0.0;     // max(0, -lambda_min)
  double purity = 0.0;  // max |tr(rho^2) - 1|
};
EncodingQuality encoding_quality(const EncodingSet& enc);

/// Average winning probability (1/(2^n n)) sum_{y,x} tr[rho_x Pi_y^{x_y}].
double success_probability(const QuantumStrategy& strategy, const Game& game);

struct DeltaResult {
  Hermitian delta;
  double trace = 0.0;
};

/// Correlation operator sum_y C_y B_y for the family's Alice combinations and
/// the given Bob observables (products symmetrised, which leaves the trace
/// unchanged). The success probability of the matching encoding obeys
/// P = 1/2 + tr[Delta] / (2^{n+1} n).
DeltaResult assemble_delta(const Game& game, const ObservableFamily& fam,
                           const std::vector<Matrix>& bobs);

/// Best binary measurements for fixed encodings: for each y, the sign
/// observable of C_y = sum_x (-1)^{x_y} rho_x.
MeasurementSet optimal_bob(const EncodingSet& enc, const Game& game);

/// The closed-form optimal Bob observables of the explicit families (the
/// anticommuting pairs normalised by sqrt(2), shared-chain observables used
/// directly).
std::vector<Matrix> canonical_bob_observables(const ObservableFamily& fam);

/// Explicit strategy for a game with a closed-form family; for (4,3) the
/// po_exact variant is used.
QuantumStrategy explicit_strategy(const Game& game, Exec exec = Exec::parallel);

/// 1/2 + trace / (2^{n+1} n).
double success_from_delta_trace(double trace, const Game& game);

}  // namespace porac

#endif  // PORAC_QUANTUM_HPP
