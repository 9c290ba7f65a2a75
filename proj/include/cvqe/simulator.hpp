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

#include <span>

#include "cvqe/circuit.hpp"
#include "cvqe/clifford.hpp"
#include "cvqe/pauli.hpp"
#include "cvqe/state.hpp"

namespace cvqe {

void apply_clifford_gate(State& state, const CliffordGate& gate);

void apply_gate(State& state, const Gate& gate, std::span<const double> params);

/// P |state> as a new vector.
State apply_pauli(const State& state, const PauliString& p);

/// Applies the circuit gates in acting order to a copy of `initial`.
/// Rotations and Pauli exponentials read exp(-i theta G) angles from
/// `params`; the length must equal c.n_params.
State run(const ParamCircuit& c, std::span<const double> params,
          const State& initial);

/// Runs the circuit from |0...0>.
State run(const ParamCircuit& c, std::span<const double> params);

/// <s|H|s>, term by term in Hamiltonian order. Throws when the imaginary
/// residue exceeds 1e-10 (non-Hermitian input); otherwise discards it.
double expectation(const State& s, const PauliSum& h);

/// Single-code energy without a 2^n vector: every term is conjugated to
/// Q = U P U^dagger and <HF| R^dagger Q R |HF> factorizes over qubits since
/// R is a layer of single-qubit rotations and |HF> a product state.
/// rotation_params holds 3n angles in (z, y, x) per-qubit order.
double fastpath_expectation(const CliffordCircuit& u,
                            std::span<const double> rotation_params, int n_e,
                            const PauliSum& h);

}  // namespace cvqe
