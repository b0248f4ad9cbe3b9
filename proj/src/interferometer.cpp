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

#include "porac/interferometer.hpp"

#include <bit>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "porac/family.hpp"
#include "porac/quantum.hpp"

namespace porac {

Matrix prepare_state(const PreparationSetting& s) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cdouble path1 = cdouble(0.0, 1.0) * std::exp(cdouble(0.0, s.phi1)) * inv_sqrt2;
  const double c = std::cos(s.theta);
  const double sn = std::sin(s.theta);
  Matrix psi(4, 1);
  psi(0, 0) = inv_sqrt2 * c;
  psi(1, 0) = inv_sqrt2 * sn;
  psi(2, 0) = path1 * c;
  psi(3, 0) = path1 * sn;
  return psi;
}

Hermitian path_observable(const SplitterSetting& s) {
  const double na = std::norm(s.alpha);
  const double nb = std::norm(s.beta);
  if (std::abs(na + nb - 1.0) > 1e-12)
    throw std::invalid_argument("path_observable: |alpha|^2 + |beta|^2 must be 1");
  const cdouble phase = std::exp(cdouble(0.0, s.phi2));
  const cdouble off = cdouble(0.0, 2.0) * s.alpha * s.beta * phase;
  Matrix m(2, 2);
  m(0, 0) = na - nb;
  m(0, 1) = off;
  m(1, 0) = -cdouble(0.0, 2.0) * s.alpha * s.beta * std::conj(phase);
  m(1, 1) = nb - na;
  return Hermitian(std::move(m));
}

std::vector<PreparationSetting> reference_settings() {
  const double pi = std::numbers::pi;
  std::vector<PreparationSetting> out;
  for (double phi1 : {pi / 2.0, 3.0 * pi / 2.0})
    for (double theta : {0.0, pi / 2.0, pi / 4.0, 3.0 * pi / 4.0})
      out.push_back({phi1, theta});
  return out;
}

MatchResult match_encodings(const std::vector<PreparationSetting>& settings, const Game& game) {
  if (game.n != 3 || game.g != 3)
    throw std::invalid_argument("match_encodings: defined for the (3,3) game");
  if (settings.size() != 8)
    throw std::invalid_argument("match_encodings: need exactly eight settings");

  std::vector<Matrix> psi;
  psi.reserve(8);
  for (const auto& s : settings) psi.push_back(prepare_state(s));
  for (int k = 0; k < 8; ++k)
    for (int l = k + 1; l < 8; ++l) {
      cdouble overlap = 0.0;
      for (int r = 0; r < 4; ++r) overlap += std::conj(psi[k](r, 0)) * psi[l](r, 0);
      if (std::norm(overlap) > 1.0 - 1e-9)
        throw std::invalid_argument("match_encodings: settings " + std::to_string(k) + " and " +
                                    std::to_string(l) + " prepare the same state (not a bijection)");
    }

  const ObservableFamily fam = build_family(3, 3);
  const EncodingSet enc = states_from_family(fam, game);

  // fid[k][x] = <psi_k| rho_x |psi_k>.
  std::array<std::array<double, 8>, 8> fid{};
  for (int k = 0; k < 8; ++k)
    for (std::uint32_t x = 0; x < 8; ++x) {
      cdouble v = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          v += std::conj(psi[k](r, 0)) * enc.state(x)(r, c) * psi[k](c, 0);
      fid[k][x] = v.real();
    }

  std::vector<std::uint32_t> even, odd;
  for (std::uint32_t x = 0; x < 8; ++x)
    ((std::popcount(x) & 1) == 0 ? even : odd).push_back(x);

  MatchResult best;
  best.min_fidelity = -1.0;
  std::array<int, 8> ids{0, 1, 2, 3, 4, 5, 6, 7};
  // Choose which four settings serve the even-parity inputs, then try every
  // pairing on both sides; 70 * 24 * 24 candidates.
  std::array<bool, 8> pick{};
  std::fill(pick.begin(), pick.begin() + 4, true);
  std::sort(pick.begin(), pick.end());  // lexicographic start for next_permutation
  do {
    std::array<int, 4> grp_even{}, grp_odd{};
    int ne = 0, no = 0;
    for (int k = 0; k < 8; ++k)
      if (pick[k])
        grp_even[ne++] = ids[k];
      else
        grp_odd[no++] = ids[k];

    std::array<int, 4> perm_even{0, 1, 2, 3};
    do {
      // Prune on the even side before iterating the odd permutations.
      double even_min = 2.0;
      for (int i = 0; i < 4; ++i)
        even_min = std::min(even_min, fid[grp_even[perm_even[i]]][even[i]]);
      if (even_min <= best.min_fidelity) continue;

      std::array<int, 4> perm_odd{0, 1, 2, 3};
      do {
        double m = even_min;
        for (int i = 0; i < 4; ++i) m = std::min(m, fid[grp_odd[perm_odd[i]]][odd[i]]);
        if (m > best.min_fidelity) {
          best.min_fidelity = m;
          best.bijection.clear();
          for (int i = 0; i < 4; ++i)
            best.bijection.emplace_back(grp_even[perm_even[i]], even[i]);
          for (int i = 0; i < 4; ++i)
            best.bijection.emplace_back(grp_odd[perm_odd[i]], odd[i]);
        }
      } while (std::next_permutation(perm_odd.begin(), perm_odd.end()));
    } while (std::next_permutation(perm_even.begin(), perm_even.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));

  std::sort(best.bijection.begin(), best.bijection.end());
  best.ok = best.min_fidelity >= 1.0 - 1e-9;
  return best;
}

}  // namespace porac
