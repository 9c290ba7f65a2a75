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

#include <string>
#include <vector>

#include "cvqe/grouping.hpp"
#include "cvqe/pauli.hpp"
#include "cvqe/state.hpp"

namespace cvqe {

enum class CliffordKind { H, S, Sdg, X, CNOT, CZ };

struct CliffordGate {
  CliffordKind kind;
  int target = -1;
  int control = -1;  // CNOT and CZ only

  bool is_two_qubit() const {
    return kind == CliffordKind::CNOT || kind == CliffordKind::CZ;
  }
  CliffordGate inverse() const;
};

/// Gate list in acting order: gates[0] is applied to the state first, so the
/// circuit as an operator is gates[m-1] * ... * gates[0].
struct CliffordCircuit {
  int n_qubits = 0;
  std::vector<CliffordGate> gates;

  void check_gates() const;

  CliffordCircuit inverse() const;

  /// One gate per line, e.g. "H 0", "SDG 2", "CNOT 0 1" (control first).
  std::string str() const;
};

/// Computes U P U^dagger via per-gate symplectic updates; the sign is tracked
/// exactly. Hermitian inputs (phase +-1) stay Hermitian.
PauliString conjugate_by_circuit(const PauliString& p,
                                 const CliffordCircuit& c);

/// Synthesizes a Clifford circuit that maps every term of g to a Z/I-only
/// string with sign +-1. Throws std::invalid_argument when g does not
/// pairwise commute. The z-only group gets an empty circuit.
///
/// The construction row-reduces an independent generating set over GF(2),
/// clears the off-pivot X block with CNOTs, cancels the symmetric Z block on
/// pivots with S and CZ, and finishes with H on the pivots.
CliffordCircuit diagonalize_group(const CommutingGroup& g);

/// A commuting set with signs chosen so each element stabilizes the group's
/// reference state U^dagger |HF>.
struct SignedStabilizerGroup {
  int index = 0;
  std::vector<PauliString> elements;  // phase_pow in {0, 2}
  int n_e = 0;
};

/// Flips each term's sign so that its diagonalized image has eigenvalue +1
/// on |HF> = |1..10..0>: the sign combines the conjugation sign with the
/// parity of the image's Z support on the first n_e qubits. Throws when u
/// fails to diagonalize a term.
SignedStabilizerGroup sign_assignment(const CommutingGroup& g,
                                      const CliffordCircuit& u, int n_e);

/// Returns U^dagger |HF> as a normalized amplitude vector.
State stabilizer_state(const CliffordCircuit& u, int n_e);

}  // namespace cvqe
