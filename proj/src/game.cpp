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

#include "porac/game.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace porac {

BitString::BitString(int n_, std::uint32_t mask_) : n(n_), mask(mask_) {
  if (n < 1 || n > 31) throw std::invalid_argument("BitString: length out of range");
  if (mask >> n) throw std::invalid_argument("BitString: mask wider than length");
}

BitString BitString::from_string(const std::string& bits) {
  BitString out(static_cast<int>(bits.size()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      out.mask |= 1u << i;
    else if (bits[i] != '0')
      throw std::invalid_argument("BitString: characters must be 0 or 1");
  }
  return out;
}

int BitString::weight() const { return std::popcount(mask); }

std::string BitString::to_string() const {
  std::string s(n, '0');
  for (int y = 1; y <= n; ++y)
    if (bit(y)) s[y - 1] = '1';
  return s;
}

int parity(const BitString& s, const BitString& x) {
  if (s.n != x.n) throw std::invalid_argument("parity: length mismatch");
  return std::popcount(s.mask & x.mask) & 1;
}

ParitySet build_parity_set(int n, int g) {
  if (n < 2 || n > 31) throw std::invalid_argument("build_parity_set: n out of range");
  if (g < 2 || g > n)
    throw std::invalid_argument("build_parity_set: g must satisfy 2 <= g <= n");
  ParitySet ps;
  ps.n = n;
  ps.g = g;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) >= g) ps.elements.push_back(s);
  return ps;
}

Rational pnc_bound(int n, int g) {
  if (n < 2 || g < 2 || g > n)
    throw std::invalid_argument("pnc_bound: need 2 <= g <= n");
  return Rational(g + n - 1, 2LL * n);
}

Channel::Channel(int n, int message_count, std::vector<Rational> probs)
    : n_(n), message_count_(message_count), probs_(std::move(probs)) {
  if (n_ < 1 || n_ > 20) throw std::invalid_argument("Channel: n out of range");
  if (message_count_ < 1) throw std::invalid_argument("Channel: message_count must be >= 1");
  const std::size_t expected = (std::size_t{1} << n_) * message_count_;
  if (probs_.size() != expected)
    throw std::invalid_argument("Channel: probability table has wrong size");
  for (std::uint32_t x = 0; x < (1u << n_); ++x) {
    Rational row(0);
    for (int m = 0; m < message_count_; ++m) {
      const Rational& v = p(m, x);
      if (v < Rational(0) || v > Rational(1))
        throw std::invalid_argument("Channel: probability outside [0,1]");
      row += v;
    }
    if (std::abs(to_double(row) - 1.0) > 1e-12)
      throw std::invalid_argument("Channel: row for input " + std::to_string(x) +
                                  " sums to " + to_string(row) + ", not 1");
  }
}

Channel Channel::deterministic(int n, int message_count, const std::vector<int>& encode) {
  if (encode.size() != (std::size_t{1} << n))
    throw std::invalid_argument("Channel::deterministic: encode table has wrong size");
  std::vector<Rational> probs((std::size_t{1} << n) * message_count, Rational(0));
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    const int m = encode[x];
    if (m < 0 || m >= message_count)
      throw std::invalid_argument("Channel::deterministic: message id out of range");
    probs[x * message_count + m] = Rational(1);
  }
  return Channel(n, message_count, std::move(probs));
}

Channel Channel::from_doubles(int n, int message_count, const std::vector<double>& probs) {
  std::vector<Rational> exact(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) exact[i] = rational_from_double(probs[i]);
  return Channel(n, message_count, std::move(exact));
}

Rational classical_success(const Channel& ch, const Decoder& dec, const Game& game) {
  if (ch.n() != game.n || dec.n != game.n || dec.message_count != ch.message_count())
    throw std::invalid_argument("classical_success: dimension mismatch");
  Rational total(0);
  for (std::uint32_t x = 0; x < game.inputs(); ++x) {
    const BitString bx(game.n, x);
    for (int y = 1; y <= game.n; ++y)
      for (int m = 0; m < ch.message_count(); ++m)
        if (dec.d(m, y) == bx.bit(y)) total += ch.p(m, x);
  }
  return total / Rational(static_cast<long long>(game.inputs()) * game.n);
}

PoCheckResult po_satisfied(const Channel& ch, const ParitySet& ps, double tol) {
  if (ch.n() != ps.n) throw std::invalid_argument("po_satisfied: length mismatch");
  double max_violation = 0.0;
  for (std::uint32_t s : ps.elements) {
    for (int m = 0; m < ch.message_count(); ++m) {
      Rational diff(0);
      for (std::uint32_t x = 0; x < (1u << ps.n); ++x) {
        if (std::popcount(s & x) & 1)
          diff -= ch.p(m, x);
        else
          diff += ch.p(m, x);
      }
      max_violation = std::max(max_violation, std::abs(to_double(diff)));
    }
  }
  return PoCheckResult{max_violation <= tol, max_violation};
}

}  // namespace porac
