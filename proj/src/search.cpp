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

#include "porac/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace porac {

namespace {

// Winning count over all (x, y) pairs for the per-message majority decoder;
// the success probability is this divided by 2^n * n.
long long majority_win_count(const std::vector<int>& encode, const Game& game,
                             int message_count) {
  const int n = game.n;
  const std::uint32_t inputs = game.inputs();
  long long total = 0;
  for (int m = 0; m < message_count; ++m) {
    for (int y = 1; y <= n; ++y) {
      int ones = 0, size = 0;
      for (std::uint32_t x = 0; x < inputs; ++x) {
        if (encode[x] != m) continue;
        ++size;
        ones += static_cast<int>((x >> (y - 1)) & 1u);
      }
      total += std::max(ones, size - ones);
    }
  }
  return total;
}

Decoder majority_decoder(const std::vector<int>& encode, const Game& game, int message_count) {
  Decoder dec;
  dec.n = game.n;
  dec.message_count = message_count;
  dec.table.assign(static_cast<std::size_t>(message_count) * game.n, 0);
  for (int m = 0; m < message_count; ++m) {
    for (int y = 1; y <= game.n; ++y) {
      int ones = 0, size = 0;
      for (std::uint32_t x = 0; x < game.inputs(); ++x) {
        if (encode[x] != m) continue;
        ++size;
        ones += static_cast<int>((x >> (y - 1)) & 1u);
      }
      dec.table[static_cast<std::size_t>(m) * game.n + (y - 1)] = ones > size - ones ? 1 : 0;
    }
  }
  return dec;
}

struct ChunkBest {
  long long best_sum = -1;
  std::vector<int> best_encode;
  std::uint64_t checked = 0;
};

// Total order on candidates: higher winning count first, then the
// lexicographically smaller encoding. Makes the parallel reduction
// independent of merge order.
void merge_into(ChunkBest& acc, const ChunkBest& other) {
  acc.checked += other.checked;
  if (other.best_sum < 0) return;
  if (other.best_sum > acc.best_sum ||
      (other.best_sum == acc.best_sum && other.best_encode < acc.best_encode)) {
    acc.best_sum = other.best_sum;
    acc.best_encode = other.best_encode;
  }
}

ChunkBest exhaustive_chunk(const Game& game, int message_count, std::uint64_t id_lo,
                           std::uint64_t id_hi) {
  const std::uint32_t inputs = game.inputs();
  ChunkBest best;
  std::vector<int> encode(inputs);
  for (std::uint64_t id = id_lo; id < id_hi; ++id) {
    std::uint64_t rem = id;
    for (std::uint32_t x = 0; x < inputs; ++x) {
      encode[x] = static_cast<int>(rem % message_count);
      rem /= message_count;
    }
    ++best.checked;
    if (!balanced_preimages(encode, game, message_count)) continue;
    ChunkBest cand;
    cand.best_sum = majority_win_count(encode, game, message_count);
    cand.best_encode = encode;
    merge_into(best, cand);
  }
  return best;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

ChunkBest local_restart(const Game& game, int message_count, std::uint64_t steps,
                        std::uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  const std::uint32_t inputs = game.inputs();

  std::vector<int> encode(inputs);
  for (std::uint32_t x = 0; x < inputs; ++x)
    encode[x] = static_cast<int>(x & ((1u << (game.g - 1)) - 1u));

  // Scramble with balance-preserving reassignments for restart diversity.
  const int scramble_moves = 8 * static_cast<int>(inputs);
  for (int i = 0; i < scramble_moves; ++i) {
    const std::uint32_t x = static_cast<std::uint32_t>(rng() % inputs);
    const int m = static_cast<int>(rng() % message_count);
    const int old = encode[x];
    if (m == old) continue;
    encode[x] = m;
    if (!balanced_preimages(encode, game, message_count)) encode[x] = old;
  }

  ChunkBest best;
  long long cur = majority_win_count(encode, game, message_count);
  for (std::uint64_t step = 0; step < steps; ++step) {
    ++best.checked;
    const std::uint32_t x = static_cast<std::uint32_t>(rng() % inputs);
    const int m = static_cast<int>(rng() % message_count);
    const int old = encode[x];
    if (m == old) continue;
    encode[x] = m;
    if (balanced_preimages(encode, game, message_count)) {
      const long long cand = majority_win_count(encode, game, message_count);
      if (cand > cur) {
        cur = cand;
        continue;
      }
    }
    encode[x] = old;
  }
  best.best_sum = cur;
  best.best_encode = encode;
  return best;
}

SearchResult finish(const Game& game, int message_count, const ChunkBest& best) {
  SearchResult out;
  out.candidates_checked = best.checked;
  if (best.best_sum < 0)
    throw std::runtime_error("search_po_deterministic: no balanced strategy found");
  out.best.encode = best.best_encode;
  out.best.decode = majority_decoder(best.best_encode, game, message_count);
  out.value = Rational(best.best_sum, static_cast<long long>(game.inputs()) * game.n);
  return out;
}

}  // namespace

bool balanced_preimages(const std::vector<int>& encode, const Game& game, int message_count) {
  for (int m = 0; m < message_count; ++m) {
    for (std::uint32_t s : game.parity_set.elements) {
      int diff = 0;
      for (std::uint32_t x = 0; x < game.inputs(); ++x) {
        if (encode[x] != m) continue;
        diff += (std::popcount(s & x) & 1) ? -1 : 1;
      }
      if (diff != 0) return false;
    }
  }
  return true;
}

Channel DeterministicStrategy::channel(int message_count) const {
  const int n = decode.n;
  return Channel::deterministic(n, message_count, encode);
}

DeterministicStrategy forwarding_strategy(const Game& game) {
  const int message_count = 1 << (game.g - 1);
  std::vector<int> encode(game.inputs());
  for (std::uint32_t x = 0; x < game.inputs(); ++x)
    encode[x] = static_cast<int>(x & ((1u << (game.g - 1)) - 1u));
  DeterministicStrategy s;
  s.encode = encode;
  s.decode = majority_decoder(encode, game, message_count);
  return s;
}

Rational deterministic_success(const DeterministicStrategy& s, const Game& game) {
  const int message_count = s.decode.message_count;
  return Rational(majority_win_count(s.encode, game, message_count),
                  static_cast<long long>(game.inputs()) * game.n);
}

SearchResult search_po_deterministic(const Game& game, SearchMode mode, std::uint64_t budget,
                                     std::uint64_t seed, Exec exec) {
  if (mode == SearchMode::exhaustive) {
    if (game.n > 3)
      throw std::invalid_argument(
          "search_po_deterministic: exhaustive mode supports n <= 3 only "
          "(the encoding space grows as (2^{n-1})^(2^n)); use local mode");
    const int message_count = 1 << (game.n - 1);
    const std::uint64_t total = pow_u64(message_count, game.inputs());
    const std::uint64_t chunk = 4096;
    const std::uint64_t chunks = (total + chunk - 1) / chunk;

    ChunkBest best;
    if (exec == Exec::serial) {
      best = exhaustive_chunk(game, message_count, 0, total);
    } else {
#pragma omp parallel
      {
        ChunkBest local;
#pragma omp for schedule(static) nowait
        for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
          const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
          const std::uint64_t hi = std::min(lo + chunk, total);
          merge_into(local, exhaustive_chunk(game, message_count, lo, hi));
        }
#pragma omp critical
        merge_into(best, local);
      }
    }
    return finish(game, message_count, best);
  }

  // Local mode.
  const int message_count = 1 << (game.n - 1);
  const std::uint64_t steps_per_restart = std::min<std::uint64_t>(budget, 2000);
  const std::uint64_t restarts =
      steps_per_restart == 0 ? 1 : (budget + steps_per_restart - 1) / steps_per_restart;

  ChunkBest best;
  if (exec == Exec::serial) {
    for (std::uint64_t r = 0; r < restarts; ++r)
      merge_into(best, local_restart(game, message_count, steps_per_restart, mix_seed(seed, r)));
  } else {
#pragma omp parallel
    {
      ChunkBest local;
#pragma omp for schedule(static) nowait
      for (long long r = 0; r < static_cast<long long>(restarts); ++r)
        merge_into(local, local_restart(game, message_count, steps_per_restart,
                                        mix_seed(seed, static_cast<std::uint64_t>(r))));
#pragma omp critical
      merge_into(best, local);
    }
  }
  return finish(game, message_count, best);
}

}  // namespace porac
