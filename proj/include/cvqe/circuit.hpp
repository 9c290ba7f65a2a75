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

#include <optional>
#include <string>
#include <vector>

#include "cvqe/clifford.hpp"
#include "cvqe/grouping.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

enum class GateKind { H, S, Sdg, X, CNOT, CZ, RX, RY, RZ, PauliExp };

/// One circuit element. Rotations implement g(theta) = exp(-i theta G) with
/// G the bare Pauli (no 1/2), reading theta from the parameter slot scaled
/// by param_scale. PauliExp uses its generator string the same way; the
/// generator may carry sign -1.
struct Gate {
  GateKind kind;
  int target = -1;
  int control = -1;
  int slot = -1;
  double param_scale = 1.0;
  std::optional<PauliString> generator;

  static Gate clifford(const CliffordGate& g);
  static Gate rotation(GateKind kind, int target, int slot);
  static Gate pauli_exp(const PauliString& generator, int slot,
                        double param_scale = 1.0);

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
  }
  bool is_parameterized() const { return slot >= 0; }
};

enum class AnsatzKind { Custom, SingleCode, CombinedCodes, Vha, VhaGrouped };

const char* ansatz_name(AnsatzKind kind);

/// Extra structure carried by single-code circuits; lets the simulator take
/// the product-state fast path.
struct SingleCodeForm {
  CliffordCircuit diagonalizer;
  int n_e = 0;
};

/// Gate list in acting order with a parameter-slot table.
struct ParamCircuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  int n_params = 0;
  AnsatzKind ansatz = AnsatzKind::Custom;
  int layers = 1;
  std::optional<SingleCodeForm> single_code_form;

  void append(const ParamCircuit& other);
  void append_clifford(const CliffordCircuit& c);

  /// Extends the Clifford text format with lines like "RX 2 slot=7" and
  /// "PEXP Z0 Z1 slot=3".
  std::string str() const;
};

struct GateCounts {
  long two_qubit = 0;
  long single_qubit = 0;
  long parameters = 0;
};

/// X on qubits 0..n_e-1, preparing |1..10..0> from |0...0>. No parameters.
ParamCircuit hf_circuit(int n_qubits, int n_e);

/// Per qubit, in acting order, RZ RY RX with slots (slot_base + 3j) for z,
/// +1 for y, +2 for x; the per-qubit operator is Rx Ry Rz.
ParamCircuit rotation_layer(int n_qubits, int slot_base);

/// HF preparation, a rotation layer, then the inverse of u: the prepared
/// state is U^dagger R |HF>. 3n parameters.
ParamCircuit single_code(const CliffordCircuit& u, int n_e);

/// HF preparation, then per layer and per group (in the order the partition
/// lists them) U_i, a fresh rotation layer, U_i^dagger. 3 n m layers
/// parameters in total.
ParamCircuit combined_codes(const Partition& p,
                            const std::vector<CliffordCircuit>& diagonalizers,
                            int n_e, int layers);

/// Trotterized evolution: HF preparation then exp(-i theta_k P_k) per
/// non-identity term in Hamiltonian order, fresh slots per layer.
ParamCircuit vha(const PauliSum& h, int n_e, int layers);

/// Grouped form: per group U_k, the diagonalized exponentials, U_k^dagger.
ParamCircuit vha_grouped(const Partition& p,
                         const std::vector<CliffordCircuit>& diagonalizers,
                         int n_e, int layers);

/// Rewrites every PauliExp into basis changes, a CNOT ladder, one RZ, and
/// the unconjugation: a weight-w exponential costs 2(w-1) CNOTs.
ParamCircuit compile_pauli_exponentials(const ParamCircuit& c);

/// Gate totals of the compiled circuit; CNOT and CZ count as two-qubit.
GateCounts compile_and_count(const ParamCircuit& c);

}  // namespace cvqe
