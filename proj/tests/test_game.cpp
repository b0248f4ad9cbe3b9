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

#include <algorithm>
#include <random>
#include <set>

#include "porac/game.hpp"

using namespace porac;

namespace {

// First-two-bits channel on n=3: m = (x1, x2), four messages.
Channel first_two_bits_channel() {
  std::vector<int> encode(8);
  for (std::uint32_t x = 0; x < 8; ++x) encode[x] = static_cast<int>(x & 3u);
  return Channel::deterministic(3, 4, encode);
}

Decoder echo_two_bits_decoder() {
  // d(m, 1) = m1, d(m, 2) = m2, d(m, 3) = 0.
  Decoder dec;
  dec.n = 3;
  dec.message_count = 4;
  dec.table.resize(12);
  for (int m = 0; m < 4; ++m) {
    dec.table[m * 3 + 0] = m & 1;
    dec.table[m * 3 + 1] = (m >> 1) & 1;
    dec.table[m * 3 + 2] = 0;
  }
  return dec;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("BitString round trip and bit order") {
  const BitString x = BitString::from_string("1101");
  CHECK(x.bit(1) == 1);
  CHECK(x.bit(2) == 1);
  CHECK(x.bit(3) == 0);
  CHECK(x.bit(4) == 1);
  CHECK(x.weight() == 3);
  CHECK(x.to_string() == "1101");
}

TEST_CASE("parity examples") {
  CHECK(parity(BitString::from_string("111"), BitString::from_string("011")) == 0);
  CHECK(parity(BitString::from_string("111"), BitString::from_string("001")) == 1);
  CHECK(parity(BitString::from_string("1110"), BitString::from_string("1001")) == 1);
  CHECK_THROWS_AS(parity(BitString::from_string("111"), BitString::from_string("11")),
                  std::invalid_argument);
}

TEST_CASE("build_parity_set examples") {
  const ParitySet p33 = build_parity_set(3, 3);
  REQUIRE(p33.elements.size() == 1);
  CHECK(BitString(3, p33.elements[0]).to_string() == "111");

  const ParitySet p43 = build_parity_set(4, 3);
  REQUIRE(p43.elements.size() == 5);
  std::set<std::string> got;
  for (std::uint32_t s : p43.elements) got.insert(BitString(4, s).to_string());
  CHECK(got == std::set<std::string>{"1110", "1101", "1011", "0111", "1111"});

  for (int n = 2; n <= 8; ++n) {
    const ParitySet pnn = build_parity_set(n, n);
    REQUIRE(pnn.elements.size() == 1);
    CHECK(BitString(n, pnn.elements[0]).weight() == n);
  }

  CHECK_THROWS_AS(build_parity_set(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_parity_set(4, 5), std::invalid_argument);
}

TEST_CASE("parity set size matches the binomial tail") {
  for (int n = 2; n <= 10; ++n)
    for (int g = 2; g <= n; ++g) {
      long long expect = 0;
      for (int k = g; k <= n; ++k) expect += binomial(n, k);
      CHECK(static_cast<long long>(build_parity_set(n, g).elements.size()) == expect);
    }
}

TEST_CASE("pnc_bound values and monotonicity") {
  CHECK(pnc_bound(3, 3) == Rational(5, 6));
  CHECK(pnc_bound(4, 4) == Rational(7, 8));
  for (int n = 2; n <= 10; ++n) {
    CHECK(pnc_bound(n, 2) == Rational(n + 1, 2 * n));
    for (int g = 3; g <= n; ++g) CHECK(pnc_bound(n, g) > pnc_bound(n, g - 1));
  }
  CHECK_THROWS_AS(pnc_bound(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(pnc_bound(3, 4), std::invalid_argument);
}

TEST_CASE("classical_success of the two-bit forwarding strategy is 5/6") {
  const Game game(3, 3);
  CHECK(classical_success(first_two_bits_channel(), echo_two_bits_decoder(), game) ==
        Rational(5, 6));
}

TEST_CASE("classical_success blind guessing gives 1/2") {
  const Game game(3, 3);
  const Channel constant = Channel::deterministic(3, 1, std::vector<int>(8, 0));
  Decoder dec;
  dec.n = 3;
  dec.message_count = 1;
  dec.table = {0, 0, 0};
  CHECK(classical_success(constant, dec, game) == Rational(1, 2));
}

TEST_CASE("classical_success one-bit echo on n=2 gives 3/4") {
  const Game game(2, 2);
  std::vector<int> encode = {0, 1, 0, 1};  // m = x1
  const Channel ch = Channel::deterministic(2, 2, encode);
  Decoder dec;
  dec.n = 2;
  dec.message_count = 2;
  dec.table = {0, 0, 1, 0};  // d(m,1)=m, d(m,2)=0
  CHECK(classical_success(ch, dec, game) == Rational(3, 4));
}

TEST_CASE("po_satisfied on structured channels") {
  const ParitySet ps = build_parity_set(3, 3);

  std::vector<int> identity_encode(8);
  for (int x = 0; x < 8; ++x) identity_encode[x] = x;
  const PoCheckResult identity = po_satisfied(Channel::deterministic(3, 8, identity_encode), ps);
  CHECK_FALSE(identity.ok);
  CHECK(identity.max_violation == 1.0);

  const PoCheckResult constant =
      po_satisfied(Channel::deterministic(3, 1, std::vector<int>(8, 0)), ps);
  CHECK(constant.ok);
  CHECK(constant.max_violation == 0.0);

  const PoCheckResult forwarding = po_satisfied(first_two_bits_channel(), ps, 0.0);
  CHECK(forwarding.ok);
  CHECK(forwarding.max_violation == 0.0);
}

TEST_CASE("po_satisfied is invariant under message relabelling") {
  std::mt19937_64 rng(21);
  const int n = 3, messages = 4, denom = 64;
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<Rational> probs(static_cast<std::size_t>(1 << n) * messages);
    for (int x = 0; x < (1 << n); ++x) {
      int remaining = denom;
      for (int m = 0; m < messages; ++m) {
        const int take =
            m + 1 == messages ? remaining : static_cast<int>(rng() % (remaining + 1));
        probs[static_cast<std::size_t>(x) * messages + m] = Rational(take, denom);
        remaining -= take;
      }
    }
    const Channel ch(n, messages, probs);

    std::vector<int> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> permuted(probs.size());
    for (int x = 0; x < (1 << n); ++x)
      for (int m = 0; m < messages; ++m)
        permuted[static_cast<std::size_t>(x) * messages + perm[m]] =
            probs[static_cast<std::size_t>(x) * messages + m];
    const Channel chp(n, messages, permuted);

    const ParitySet ps = build_parity_set(3, 2);
    const PoCheckResult a = po_satisfied(ch, ps);
    const PoCheckResult b = po_satisfied(chp, ps);
    CHECK(a.ok == b.ok);
    CHECK(a.max_violation == doctest::Approx(b.max_violation).epsilon(1e-14));
  }
}

TEST_CASE("channel validation rejects bad rows") {
  std::vector<Rational> probs = {Rational(1, 2), Rational(1, 4),  // first row sums to 3/4
                                 Rational(1, 2), Rational(1, 2),
                                 Rational(1, 2), Rational(1, 2),
                                 Rational(1, 2), Rational(1, 2)};
  CHECK_THROWS_AS(Channel(2, 2, probs), std::invalid_argument);
}

TEST_CASE("rational_from_double is exact on dyadics") {
  CHECK(rational_from_double(0.25) == Rational(1, 4));
  CHECK(rational_from_double(0.0) == Rational(0));
  CHECK(rational_from_double(1.0) == Rational(1));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
}
