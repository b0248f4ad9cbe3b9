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

#ifndef PORAC_PAULI_HPP
#define PORAC_PAULI_HPP

#include <string>
#include <vector>

#include "porac/eig.hpp"
#include "porac/matrix.hpp"

namespace porac {

enum class Pauli { I, X, Y, Z };

const Matrix& pauli_matrix(Pauli p);

/// Tensor product of single-qubit Pauli matrices, left factor first.
Hermitian pauli_string(const std::vector<Pauli>& factors);

/// Convenience: "XZI" -> sigma_x (x) sigma_z (x) I.
Hermitian pauli_string(const std::string& factors);

}  // namespace porac

#endif  // PORAC_PAULI_HPP
