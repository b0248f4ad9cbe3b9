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

#ifndef PORAC_GAME_HPP
#define PORAC_GAME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "porac/rational.hpp"

namespace porac {

/// An n-bit string x = x_1 ... x_n. Bit y (1-based, matching the game's index
/// convention) is stored at mask bit y-1.
struct BitString {
  int n = 0;
  std::uint32_t mask = 0;

  BitString() = default;
  BitString(int n_, std::uint32_t mask_);
  static BitString from_string(const std::string& bits);

  int bit(int y) const { return static_cast<int>((mask >> (y - 1)) & 1u); }
  int weight() const;
  std::string to_string() const;  // x_1 first

  friend bool operator==(const BitString&, const BitString&) = default;
};

/// Mod-2 inner product s.x. Lengths must match.
int parity(const BitString& s, const BitString& x);

/// All n-bit strings of Hamming weight >= g. Elements are stored as masks in
/// ascending order.
struct ParitySet {
  int n = 0;
  int g = 0;
  std::vector<std::uint32_t> elements;
};

ParitySet build_parity_set(int n, int g);

struct Game {
  int n = 0;
  int g = 0;
  ParitySet parity_set;

  Game(int n_, int g_) : n(n_), g(g_), parity_set(build_parity_set(n_, g_)) {}
  std::uint32_t inputs() const { return 1u << n; }
};

/// Best success probability over models where the parity constraints hold at
/// the hidden-state level: (g + n - 1) / (2n).
Rational pnc_bound(int n, int g);

/// Stochastic message map p(m|x), stored exactly. Row sums must be 1.
class Channel {
 public:
  Channel(int n, int message_count, std::vector<Rational> probs);
  static Channel deterministic(int n, int message_count, const std::vector<int>& encode);
  /// Lossless conversion from dyadic doubles (e.g. numerically computed
  /// message distributions). Rows must sum to 1 within 1e-12.
  static Channel from_doubles(int n, int message_count, const std::vector<double>& probs);

  int n() const { return n_; }
  int message_count() const { return message_count_; }
  const Rational& p(int m, std::uint32_t x) const { return probs_[x * message_count_ + m]; }
  double p_double(int m, std::uint32_t x) const { return to_double(p(m, x)); }

 private:
  int n_;
  int message_count_;
  std::vector<Rational> probs_;  // [x * message_count + m]
};

/// Deterministic decoding table b = d(m, y), y in 1..n.
struct Decoder {
  int n = 0;
  int message_count = 0;
  std::vector<int> table;  // [m * n + (y-1)], entries in {0,1}

  int d(int m, int y) const { return table[m * n + (y - 1)]; }
};

/// Average winning probability (1/(2^n n)) sum_{y,x,m} p(m|x) [d(m,y) = x_y],
/// exact because channel entries are exact.
Rational classical_success(const Channel& ch, const Decoder& dec, const Game& game);

struct PoCheckResult {
  bool ok = false;
  double max_violation = 0.0;
};

/// Operational parity-obliviousness test: for every s in the parity set and
/// every message m, |sum_{x.s=0} p(m|x) - sum_{x.s=1} p(m|x)| must not exceed
/// tol. Differences are computed exactly before comparison.
PoCheckResult po_satisfied(const Channel& ch, const ParitySet& ps, double tol = 1e-10);

}  // namespace porac

#endif  // PORAC_GAME_HPP
