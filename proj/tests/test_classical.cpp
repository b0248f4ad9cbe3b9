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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "porac/fourier.hpp"
#include "porac/ontic.hpp"
#include "porac/search.hpp"
#include "test_util.hpp"

using namespace porac;
using porac::test::random_channel;
using porac::test::structured_channels;

namespace {

// Direct-summation oracle for one Fourier coefficient.
double alpha_by_direct_sum(const Channel& ch, int m, std::uint32_t delta) {
  double sum = 0.0;
  for (std::uint32_t x = 0; x < (1u << ch.n()); ++x) {
    const double sign = (std::popcount(delta & x) & 1) ? -1.0 : 1.0;
    sum += sign * ch.p_double(m, x);
  }
  return sum / static_cast<double>(1u << ch.n());
}

Channel parity_channel3() {
  std::vector<int> encode(8);
  for (std::uint32_t x = 0; x < 8; ++x) encode[x] = std::popcount(x) & 1;
  return Channel::deterministic(3, 2, encode);
}

Channel first_two_bits_channel3() {
  std::vector<int> encode(8);
  for (std::uint32_t x = 0; x < 8; ++x) encode[x] = static_cast<int>(x & 3u);
  return Channel::deterministic(3, 4, encode);
}

}  // namespace

TEST_CASE("fourier of a constant channel") {
  const Channel ch = Channel::deterministic(3, 1, std::vector<int>(8, 0));
  const FourierTable t = fourier(ch);
  CHECK(t(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
  for (std::uint32_t d = 1; d < 8; ++d) CHECK(std::abs(t(0, d)) < 1e-14);
}

TEST_CASE("fourier of the parity channel") {
  const Channel ch = parity_channel3();
  const FourierTable t = fourier(ch);
  const std::uint32_t all_ones = 7;
  CHECK(alpha_by_direct_sum(ch, 0, all_ones) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(t(0, all_ones) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(t(1, all_ones) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("fourier of the first-two-bits channel kills the full-weight coefficient") {
  const Channel ch = first_two_bits_channel3();
  const FourierTable t = fourier(ch);
  for (int m = 0; m < 4; ++m) {
    CHECK(std::abs(alpha_by_direct_sum(ch, m, 7)) < 1e-14);
    CHECK(std::abs(t(m, 7)) < 1e-14);
  }
}

TEST_CASE("fourier table matches the direct sum and reconstructs the channel") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int messages = 2 + static_cast<int>(rng() % 3);
    const Channel ch = random_channel(n, messages, 1024, rng);
    const FourierTable t = fourier(ch);
    for (int m = 0; m < messages; ++m) {
      const std::uint32_t d = static_cast<std::uint32_t>(rng() % (1u << n));
      CHECK(t(m, d) == doctest::Approx(alpha_by_direct_sum(ch, m, d)).epsilon(1e-12));
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        CHECK(std::abs(t.reconstruct(m, x) - ch.p_double(m, x)) < 1e-10);
    }
  }
}

TEST_CASE("po_via_fourier equals po_satisfied on random and structured channels") {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int g = 2 + static_cast<int>(rng() % (n - 1));
    const ParitySet ps = build_parity_set(n, g);
    const Channel ch = random_channel(n, 3, 1000, rng);
    CHECK(po_via_fourier(ch, ps, 1e-10) == po_satisfied(ch, ps, 1e-10).ok);
    ++checked;
  }
  for (int n = 2; n <= 4; ++n) {
    for (const Channel& ch : structured_channels(n)) {
      for (int g = 2; g <= n; ++g) {
        const ParitySet ps = build_parity_set(n, g);
        CHECK(po_via_fourier(ch, ps, 1e-10) == po_satisfied(ch, ps, 1e-10).ok);
        ++checked;
      }
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("exhaustive search matches the noncontextual bounds") {
  struct Case {
    int n, g;
    Rational expect;
  };
  for (const Case& c : {Case{2, 2, Rational(3, 4)}, Case{3, 2, Rational(2, 3)},
                        Case{3, 3, Rational(5, 6)}}) {
    const Game game(c.n, c.g);
    const SearchResult res = search_po_deterministic(game, SearchMode::exhaustive, 0, 0);
    CHECK(res.value == c.expect);
    CHECK(res.value == pnc_bound(c.n, c.g));

    // The winner must be exactly balanced and its success must agree with the
    // generic channel/decoder evaluation.
    const int messages = res.best.decode.message_count;
    const PoCheckResult po = po_satisfied(res.best.channel(messages), game.parity_set, 0.0);
    CHECK(po.ok);
    CHECK(po.max_violation == 0.0);
    CHECK(classical_success(res.best.channel(messages), res.best.decode, game) == res.value);
  }
}

TEST_CASE("exhaustive search rejects n > 3") {
  const Game game(4, 3);
  CHECK_THROWS_WITH_AS(search_po_deterministic(game, SearchMode::exhaustive, 0, 0),
                       doctest::Contains("local"), std::invalid_argument);
}

TEST_CASE("serial and parallel searches agree") {
  const Game game(3, 3);
  const SearchResult a = search_po_deterministic(game, SearchMode::exhaustive, 0, 0, Exec::serial);
  const SearchResult b =
      search_po_deterministic(game, SearchMode::exhaustive, 0, 0, Exec::parallel);
  CHECK(a.value == b.value);
  CHECK(a.best.encode == b.best.encode);

  const Game g43(4, 3);
  const SearchResult c =
      search_po_deterministic(g43, SearchMode::local, 20000, 5, Exec::serial);
  const SearchResult d =
      search_po_deterministic(g43, SearchMode::local, 20000, 5, Exec::parallel);
  CHECK(c.value == d.value);
  CHECK(c.best.encode == d.best.encode);
}

TEST_CASE("local search stays at or below the bound and forwarding attains it") {
  for (int g : {3, 4}) {
    const Game game(4, g);
    const SearchResult res = search_po_deterministic(game, SearchMode::local, 10000, 1);
    CHECK(res.value <= pnc_bound(4, g));
    CHECK(balanced_preimages(res.best.encode, game, res.best.decode.message_count));

    const DeterministicStrategy fwd = forwarding_strategy(game);
    CHECK(deterministic_success(fwd, game) == pnc_bound(4, g));
    const PoCheckResult po =
        po_satisfied(fwd.channel(fwd.decode.message_count), game.parity_set, 0.0);
    CHECK(po.max_violation == 0.0);
  }
}

TEST_CASE("mixtures of balanced strategies never beat the noncontextual bound") {
  std::mt19937_64 rng(33);
  for (const auto& [n, g] : {std::pair<int, int>{2, 2}, {3, 2}, {3, 3}}) {
    const Game game(n, g);
    const int messages = 1 << (n - 1);

    // Collect balanced deterministic encodings by rejection sampling.
    std::vector<std::vector<int>> balanced;
    while (balanced.size() < 6) {
      std::vector<int> encode(game.inputs());
      for (auto& e : encode) e = static_cast<int>(rng() % messages);
      if (balanced_preimages(encode, game, messages)) balanced.push_back(encode);
    }

    for (int rep = 0; rep < 10; ++rep) {
      // Rational convex mixture of the balanced strategies.
      const int denom = 16;
      std::vector<Rational> probs(game.inputs() * messages, Rational(0));
      int remaining = denom;
      for (std::size_t k = 0; k < balanced.size(); ++k) {
        const int take = k + 1 == balanced.size()
                             ? remaining
                             : static_cast<int>(rng() % (remaining + 1));
        remaining -= take;
        for (std::uint32_t x = 0; x < game.inputs(); ++x)
          probs[x * messages + balanced[k][x]] += Rational(take, denom);
      }
      const Channel ch(n, messages, probs);
      REQUIRE(po_satisfied(ch, game.parity_set, 0.0).ok);

      // Optimal deterministic decoder for the mixture.
      Decoder dec;
      dec.n = n;
      dec.message_count = messages;
      dec.table.assign(static_cast<std::size_t>(messages) * n, 0);
      for (int m = 0; m < messages; ++m)
        for (int y = 1; y <= n; ++y) {
          Rational ones(0), zeros(0);
          for (std::uint32_t x = 0; x < game.inputs(); ++x)
            ((x >> (y - 1)) & 1u ? ones : zeros) += ch.p(m, x);
          dec.table[static_cast<std::size_t>(m) * n + (y - 1)] = ones > zeros ? 1 : 0;
        }
      CHECK(classical_success(ch, dec, game) <= pnc_bound(n, g));
    }
  }
}

TEST_CASE("ontic_max on the three-bit skeleton") {
  const OnticResult res = ontic_max(delta3_spec());
  CHECK(res.max == Rational(4));
  // Witness evaluates back to the maximum.
  const auto& w = res.witness;
  const int b1 = std::abs(w.at("A1") + w.at("A2"));
  const int b2 = std::abs(2 * w.at("S1"));
  const int b3 = std::abs(w.at("T1") - w.at("T2"));
  CHECK(b1 + b2 + b3 == 4);
  CHECK(w.at("T1") == w.at("A1") * w.at("S1"));
  CHECK(w.at("T2") == w.at("A2") * w.at("S1"));
}

TEST_CASE("ontic_max on the four-bit skeletons") {
  CHECK(ontic_max(delta44_spec()).max == Rational(6));
  CHECK(ontic_max(delta43_spec()).max == Rational(8));
}

TEST_CASE("ontic_max is invariant under label renaming and Bob sign flips") {
  CorrelationSpec spec = delta3_spec();
  for (auto& l : spec.alice_labels) l = "obs_" + l;
  for (auto& t : spec.terms)
    for (auto& [label, coeff] : t.coeffs) label = "obs_" + label;
  for (auto& c : spec.constraints) {
    c.result = "obs_" + c.result;
    for (auto& f : c.factors) f = "obs_" + f;
  }
  CHECK(ontic_max(spec).max == Rational(4));

  CorrelationSpec flipped = delta3_spec();
  for (auto& [label, coeff] : flipped.terms[1].coeffs) coeff = -coeff;
  CHECK(ontic_max(flipped).max == Rational(4));
}

TEST_CASE("ontic_max rejects contradictory constraints") {
  CorrelationSpec spec = delta3_spec();
  ProductConstraint clash;
  clash.factors = {"A1", "S1"};
  clash.result = "T1";
  clash.sign = -1;  // contradicts the +1 version already present
  spec.constraints.push_back(clash);
  CHECK_THROWS_WITH_AS(ontic_max(spec), doctest::Contains("no satisfying"),
                       std::invalid_argument);
}

TEST_CASE("ontic_max rejects undeclared labels") {
  CorrelationSpec spec = delta3_spec();
  spec.terms.push_back({{{"nope", 1}}, 1});
  CHECK_THROWS_AS(ontic_max(spec), std::invalid_argument);
}
