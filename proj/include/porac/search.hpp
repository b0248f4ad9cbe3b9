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

#ifndef PORAC_SEARCH_HPP
#define PORAC_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "porac/exec.hpp"
#include "porac/game.hpp"

namespace porac {

/// Deterministic encoding plus the induced majority decoder.
struct DeterministicStrategy {
  std::vector<int> encode;  // [x] -> message id
  Decoder decode;

  Channel channel(int message_count) const;
};

enum class SearchMode { exhaustive, local };

struct SearchResult {
  DeterministicStrategy best;
  Rational value{0};
  std::uint64_t candidates_checked = 0;
};

/// Best deterministic strategy whose every message preimage is balanced with
/// respect to every parity-set element (the deterministic parity-oblivious
/// condition). Exhaustive mode enumerates all encodings into 2^{n-1} messages
/// and is restricted to n <= 3; local mode runs seeded random restarts with
/// single-reassignment hill climbing, rejecting moves that break balance.
/// `budget` counts proposals in local mode and is ignored in exhaustive mode.
/// Results are identical for both Exec policies and any thread count.
SearchResult search_po_deterministic(const Game& game, SearchMode mode, std::uint64_t budget,
                                     std::uint64_t seed, Exec exec = Exec::parallel);

/// Forwards the first g-1 input bits verbatim; its success probability equals
/// the noncontextual bound exactly.
DeterministicStrategy forwarding_strategy(const Game& game);

/// Success probability of a deterministic strategy, exact.
Rational deterministic_success(const DeterministicStrategy& s, const Game& game);

/// True iff every message preimage is balanced for every parity element.
bool balanced_preimages(const std::vector<int>& encode, const Game& game, int message_count);

}  // namespace porac

#endif  // PORAC_SEARCH_HPP
