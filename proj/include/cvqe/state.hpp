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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cvqe {

/// Dense complex amplitude vector of length 2^n.
///
/// Qubit 0 is the most significant bit of the amplitude index, so the index
/// of a computational basis state is its ket label read as a binary number:
/// |1100> on four qubits lives at index 0b1100 = 12.
struct State {
  int n_qubits = 0;
  std::vector<std::complex<double>> amps;

  static State zero_state(int n_qubits);

  /// Basis state from a ket label; bit (n-1-j) of `ket` is the value of
  /// qubit j.
  static State basis_state(int n_qubits, std::uint64_t ket);

  /// The Hartree-Fock reference |1...10...0> with the first n_e qubits set.
  static State hartree_fock(int n_qubits, int n_e);

  std::size_t dim() const { return amps.size(); }
  double norm() const;

  /// Index-space mask of qubit j (most-significant-first convention).
  std::uint64_t qubit_mask(int qubit) const {
    return 1ull << (n_qubits - 1 - qubit);
  }
};

}  // namespace cvqe
