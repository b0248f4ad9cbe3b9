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

#ifndef PORAC_RATIONAL_HPP
#define PORAC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace porac {

// Exact arithmetic for the game-value side of the library. Denominators stay
// tiny (powers of two times the game size), far from overflow.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Exact conversion of a double into a rational. Doubles are dyadic, so this
/// is lossless as long as the scaled mantissa fits in long long.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  const long long num = static_cast<long long>(std::ldexp(mant, 53));
  const int shift = 53 - exp;
  if (shift < 0) {
    if (shift < -10) throw std::invalid_argument("rational_from_double: value too large");
    return Rational(num << -shift, 1);
  }
  if (shift > 62) throw std::invalid_argument("rational_from_double: value too small to represent");
  return Rational(num, 1LL << shift);
}

}  // namespace porac

#endif  // PORAC_RATIONAL_HPP
