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

#ifndef PORAC_INTERFEROMETER_HPP
#define PORAC_INTERFEROMETER_HPP

#include <utility>
#include <vector>

#include "porac/eig.hpp"
#include "porac/game.hpp"
#include "porac/matrix.hpp"

namespace porac {

/// Source-side settings: phase phi1 on the path qubit, polarisation angle theta.
struct PreparationSetting {
  double phi1 = 0.0;
  double theta = 0.0;
};

/// Output beam-splitter settings: reflectivity alpha, transmissivity beta
/// (|alpha|^2 + |beta|^2 = 1) and phase phi2.
struct SplitterSetting {
  cdouble alpha{0.0};
  cdouble beta{0.0};
  double phi2 = 0.0;
};

/// ((|0> + i e^{i phi1} |1>)/sqrt(2)) (x) (cos(theta)|0> + sin(theta)|1>),
/// path factor first. Returned as a unit column vector of dimension 4.
Matrix prepare_state(const PreparationSetting& s);

/// Path observable realised by the splitter:
/// [[|a|^2-|b|^2, 2i a b e^{i phi2}], [-2i a b e^{-i phi2}, |b|^2-|a|^2]].
Hermitian path_observable(const SplitterSetting& s);

/// The eight device settings that realise the 3-bit game's encodings:
/// phi1 in {pi/2, 3pi/2} x theta in {0, pi/2, pi/4, 3pi/4}.
std::vector<PreparationSetting> reference_settings();

struct MatchResult {
  bool ok = false;
  double min_fidelity = 0.0;
  // setting index -> input mask, best parity-consistent assignment found.
  std::vector<std::pair<int, std::uint32_t>> bijection;
};

/// Exhaustive parity-consistent bijection search between eight prepared
/// states and the game's explicit encodings, maximising the minimum state
/// fidelity. `ok` iff the best bijection reaches 1 - 1e-9. Duplicate settings
/// are rejected (no bijection exists).
MatchResult match_encodings(const std::vector<PreparationSetting>& settings, const Game& game);

}  // namespace porac

#endif  // PORAC_INTERFEROMETER_HPP
