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

#ifndef PORAC_EXEC_HPP
#define PORAC_EXEC_HPP

#include <cstdint>

namespace porac {

// Every parallel kernel in this library is a chunked run of its serial
// reference implementation with a deterministic reduction, so results are
// identical for both policies and for any thread count.
enum class Exec { serial, parallel };

/// splitmix64; used to derive independent per-chunk RNG seeds from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace porac

#endif  // PORAC_EXEC_HPP
