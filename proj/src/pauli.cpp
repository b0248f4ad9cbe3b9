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

#include "porac/pauli.hpp"

#include <stdexcept>

namespace porac {

const Matrix& pauli_matrix(Pauli p) {
  static const Matrix id{{1, 0}, {0, 1}};
  static const Matrix x{{0, 1}, {1, 0}};
  static const Matrix y{{0, cdouble(0, -1)}, {cdouble(0, 1), 0}};
  static const Matrix z{{1, 0}, {0, -1}};
  switch (p) {
    case Pauli::I: return id;
    case Pauli::X: return x;
    case Pauli::Y: return y;
    case Pauli::Z: return z;
  }
  throw std::invalid_argument("pauli_matrix: bad enum");
}

Hermitian pauli_string(const std::vector<Pauli>& factors) {
  if (factors.empty()) throw std::invalid_argument("pauli_string: empty factor list");
  Matrix out = pauli_matrix(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, pauli_matrix(factors[i]));
  return Hermitian(std::move(out));
}

Hermitian pauli_string(const std::string& factors) {
  std::vector<Pauli> ps;
  ps.reserve(factors.size());
  for (char c : factors) {
    switch (c) {
      case 'I': ps.push_back(Pauli::I); break;
      case 'X': ps.push_back(Pauli::X); break;
      case 'Y': ps.push_back(Pauli::Y); break;
      case 'Z': ps.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("pauli_string: bad character in spec");
    }
  }
  return pauli_string(ps);
}

}  // namespace porac
