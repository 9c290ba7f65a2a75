// Copyright 2026 The codespace-vqe developers
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

#include "cvqe/state.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqe {

State State::zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

State State::basis_state(int n_qubits, std::uint64_t ket) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw std::invalid_argument("unsupported qubit count for dense states");
  }
  State s;
  s.n_qubits = n_qubits;
  s.amps.assign(1ull << n_qubits, {0.0, 0.0});
  if (ket >= s.amps.size()) throw std::invalid_argument("ket out of range");
  s.amps[ket] = {1.0, 0.0};
  return s;
}

State State::hartree_fock(int n_qubits, int n_e) {
  if (n_e < 0 || n_e > n_qubits) {
    throw std::invalid_argument("electron count out of range");
  }
  std::uint64_t ket = 0;
  for (int j = 0; j < n_e; ++j) ket |= 1ull << (n_qubits - 1 - j);
  return basis_state(n_qubits, ket);
}

double State::norm() const {
  double total = 0.0;
  for (const auto& a : amps) total += std::norm(a);
  return std::sqrt(total);
}

}  // namespace cvqe
