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

#include "porac/fourier.hpp"

#include <bit>
#include <cmath>

namespace porac {

double FourierTable::reconstruct(int m, std::uint32_t x) const {
  const std::size_t size = std::size_t{1} << n;
  double p = 0.0;
  for (std::uint32_t delta = 0; delta < size; ++delta) {
    const double sign = (std::popcount(delta & x) & 1) ? -1.0 : 1.0;
    p += (*this)(m, delta) * sign;
  }
  return p;
}

FourierTable fourier(const Channel& ch) {
  const int n = ch.n();
  const std::size_t size = std::size_t{1} << n;
  FourierTable table;
  table.n = n;
  table.message_count = ch.message_count();
  table.alpha.resize(size * ch.message_count());

  std::vector<double> buf(size);
  for (int m = 0; m < ch.message_count(); ++m) {
    for (std::uint32_t x = 0; x < size; ++x) buf[x] = ch.p_double(m, x);
    // In-place Walsh-Hadamard butterfly.
    for (std::size_t len = 1; len < size; len <<= 1) {
      for (std::size_t i = 0; i < size; i += len << 1) {
        for (std::size_t j = i; j < i + len; ++j) {
          const double u = buf[j];
          const double v = buf[j + len];
          buf[j] = u + v;
          buf[j + len] = u - v;
        }
      }
    }
    const double scale = 1.0 / static_cast<double>(size);
    for (std::uint32_t delta = 0; delta < size; ++delta)
      table.alpha[static_cast<std::size_t>(m) * size + delta] = buf[delta] * scale;
  }
  return table;
}

bool po_via_fourier(const Channel& ch, const ParitySet& ps, double tol) {
  const FourierTable table = fourier(ch);
  for (std::uint32_t s : ps.elements)
    for (int m = 0; m < ch.message_count(); ++m)
      if (std::abs(table(m, s)) > tol) return false;
  return true;
}

}  // namespace porac
