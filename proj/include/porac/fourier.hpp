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

#ifndef PORAC_FOURIER_HPP
#define PORAC_FOURIER_HPP

#include <cstdint>
#include <vector>

#include "porac/game.hpp"

namespace porac {

/// Character expansion of a channel: p(m|x) = sum_delta alpha_delta(m) (-1)^{x.delta}
/// with alpha_delta(m) = 2^{-n} sum_x (-1)^{x.delta} p(m|x).
struct FourierTable {
  int n = 0;
  int message_count = 0;
  std::vector<double> alpha;  // [m * 2^n + delta]

  double operator()(int m, std::uint32_t delta) const {
    return alpha[static_cast<std::size_t>(m) * (std::size_t{1} << n) + delta];
  }
  double reconstruct(int m, std::uint32_t x) const;
};

FourierTable fourier(const Channel& ch);

/// Parity-obliviousness via the expansion: true iff |alpha_s(m)| <= tol for
/// every s in the parity set and every message.
bool po_via_fourier(const Channel& ch, const ParitySet& ps, double tol = 1e-10);

}  // namespace porac

#endif  // PORAC_FOURIER_HPP
