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

#include "cvqe/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

GateKind from_clifford(CliffordKind kind) {
  switch (kind) {
    case CliffordKind::H: return GateKind::H;
    case CliffordKind::S: return GateKind::S;
    case CliffordKind::Sdg: return GateKind::Sdg;
    case CliffordKind::X: return GateKind::X;
    case CliffordKind::CNOT: return GateKind::CNOT;
    case CliffordKind::CZ: return GateKind::CZ;
  }
  throw std::logic_error("bad Clifford kind");
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::PauliExp: return "PEXP";
  }
  return "?";
}

}  // namespace

Gate Gate::clifford(const CliffordGate& g) {
  Gate gate;
  gate.kind = from_clifford(g.kind);
  gate.target = g.target;
  gate.control = g.control;
  return gate;
}

Gate Gate::rotation(GateKind kind, int target, int slot) {
  if (kind != GateKind::RX && kind != GateKind::RY && kind != GateKind::RZ) {
    throw std::invalid_argument("not a rotation kind");
  }
  Gate gate;
  gate.kind = kind;
  gate.target = target;
  gate.slot = slot;
  return gate;
}

Gate Gate::pauli_exp(const PauliString& generator, int slot,
                     double param_scale) {
  if (generator.phase_pow() % 2 != 0) {
    throw std::invalid_argument("exponential generator must carry sign +-1");
  }
  Gate gate;
  gate.kind = GateKind::PauliExp;
  gate.slot = slot;
  gate.param_scale = param_scale;
  gate.generator = generator;
  return gate;
}

const char* ansatz_name(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::Custom: return "custom";
    case AnsatzKind::SingleCode: return "single-code";
    case AnsatzKind::CombinedCodes: return "combined-codes";
    case AnsatzKind::Vha: return "vha";
    case AnsatzKind::VhaGrouped: return "vha-grouped";
  }
  return "?";
}

void ParamCircuit::append(const ParamCircuit& other) {
  if (other.n_qubits != n_qubits) {
    throw std::invalid_argument("circuit size mismatch");
  }
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  n_params = std::max(n_params, other.n_params);
}

void ParamCircuit::append_clifford(const CliffordCircuit& c) {
  if (c.n_qubits != n_qubits) {
    throw std::invalid_argument("circuit size mismatch");
  }
  for (const CliffordGate& g : c.gates) gates.push_back(Gate::clifford(g));
}

std::string ParamCircuit::str() const {
  std::ostringstream out;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::PauliExp) {
      out << "PEXP";
      if (g.generator->phase_pow() == 2) out << " -";
      out << ' ' << g.generator->str() << " slot=" << g.slot;
    } else {
      out << gate_name(g.kind);
      if (g.is_two_qubit()) out << ' ' << g.control;
      out << ' ' << g.target;
      if (g.slot >= 0) out << " slot=" << g.slot;
    }
    out << '\n';
  }
  return out.str();
}

ParamCircuit hf_circuit(int n_qubits, int n_e) {
  if (n_e <= 0 || n_e > n_qubits) {
    throw std::invalid_argument("electron count out of range");
  }
  ParamCircuit c;
  c.n_qubits = n_qubits;
  for (int q = 0; q < n_e; ++q) {
    Gate g;
    g.kind = GateKind::X;
    g.target = q;
    c.gates.push_back(g);
  }
  return c;
}

ParamCircuit rotation_layer(int n_qubits, int slot_base) {
  ParamCircuit c;
  c.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) {
    c.gates.push_back(Gate::rotation(GateKind::RZ, q, slot_base + 3 * q));
    c.gates.push_back(Gate::rotation(GateKind::RY, q, slot_base + 3 * q + 1));
    c.gates.push_back(Gate::rotation(GateKind::RX, q, slot_base + 3 * q + 2));
  }
  c.n_params = slot_base + 3 * n_qubits;
  return c;
}

ParamCircuit single_code(const CliffordCircuit& u, int n_e) {
  u.check_gates();
  ParamCircuit c = hf_circuit(u.n_qubits, n_e);
  c.append(rotation_layer(u.n_qubits, 0));
  c.append_clifford(u.inverse());
  c.ansatz = AnsatzKind::SingleCode;
  c.single_code_form = SingleCodeForm{u, n_e};
  return c;
}

ParamCircuit combined_codes(const Partition& p,
                            const std::vector<CliffordCircuit>& diagonalizers,
                            int n_e, int layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (p.groups.empty()) throw std::invalid_argument("empty partition");
  if (diagonalizers.size() != p.groups.size()) {
    throw std::invalid_argument("diagonalizer count does not match groups");
  }
  const int n = p.groups.front().terms.n_qubits();
  ParamCircuit c = hf_circuit(n, n_e);
  int slot_base = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
      c.append_clifford(diagonalizers[i]);
      c.append(rotation_layer(n, slot_base));
      c.append_clifford(diagonalizers[i].inverse());
      slot_base += 3 * n;
    }
  }
  c.n_params = slot_base;
  c.ansatz = AnsatzKind::CombinedCodes;
  c.layers = layers;
  return c;
}

ParamCircuit vha(const PauliSum& h, int n_e, int layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  bool has_non_identity = false;
  for (const PauliTerm& term : h.terms()) {
    if (!term.string.is_identity()) has_non_identity = true;
  }
  if (!has_non_identity) {
    throw std::invalid_argument("identity-only Hamiltonian has no ansatz");
  }
  ParamCircuit c = hf_circuit(h.n_qubits(), n_e);
  int slot = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (const PauliTerm& term : h.terms()) {
      if (term.string.is_identity()) continue;
      c.gates.push_back(Gate::pauli_exp(term.string, slot++));
    }
  }
  c.n_params = slot;
  c.ansatz = AnsatzKind::Vha;
  c.layers = layers;
  return c;
}

ParamCircuit vha_grouped(const Partition& p,
                         const std::vector<CliffordCircuit>& diagonalizers,
                         int n_e, int layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (p.groups.empty()) throw std::invalid_argument("empty partition");
  if (diagonalizers.size() != p.groups.size()) {
    throw std::invalid_argument("diagonalizer count does not match groups");
  }
  const int n = p.groups.front().terms.n_qubits();
  ParamCircuit c = hf_circuit(n, n_e);
  int slot = 0;
  for (int layer = 0; layer < layers; ++layer) {
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
      c.append_clifford(diagonalizers[i]);
      for (const PauliTerm& term : p.groups[i].terms.terms()) {
        if (term.string.is_identity()) continue;
        const PauliString image =
            conjugate_by_circuit(term.string, diagonalizers[i]);
        c.gates.push_back(Gate::pauli_exp(image, slot++));
      }
      c.append_clifford(diagonalizers[i].inverse());
    }
  }
  if (slot == 0) {
    throw std::invalid_argument("identity-only Hamiltonian has no ansatz");
  }
  c.n_params = slot;
  c.ansatz = AnsatzKind::VhaGrouped;
  c.layers = layers;
  return c;
}

ParamCircuit compile_pauli_exponentials(const ParamCircuit& c) {
  ParamCircuit out;
  out.n_qubits = c.n_qubits;
  out.n_params = c.n_params;
  out.ansatz = c.ansatz;
  out.layers = c.layers;
  out.single_code_form = c.single_code_form;
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::PauliExp) {
      out.gates.push_back(g);
      continue;
    }
    const PauliString& p = *g.generator;
    std::vector<int> support;
    for (int q = 0; q < p.n_qubits(); ++q) {
      if (p.letter(q) != 'I') support.push_back(q);
    }
    if (support.empty()) {
      throw std::invalid_argument("cannot compile an identity exponential");
    }
    // Map each X/Y factor into Z, entangle the parities onto the last
    // support qubit, rotate, then undo.
    std::vector<Gate> basis_in;
    std::vector<Gate> basis_out;
    for (int q : support) {
      const char letter = p.letter(q);
      if (letter == 'X') {
        Gate h;
        h.kind = GateKind::H;
        h.target = q;
        basis_in.push_back(h);
        basis_out.push_back(h);
      } else if (letter == 'Y') {
        Gate sdg;
        sdg.kind = GateKind::Sdg;
        sdg.target = q;
        Gate h;
        h.kind = GateKind::H;
        h.target = q;
        Gate s;
        s.kind = GateKind::S;
        s.target = q;
        basis_in.push_back(sdg);
        basis_in.push_back(h);
        basis_out.push_back(h);  // acting order H then S inverts Sdg then H
        basis_out.push_back(s);
      }
    }
    out.gates.insert(out.gates.end(), basis_in.begin(), basis_in.end());
    const int last = support.back();
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
      Gate cx;
      cx.kind = GateKind::CNOT;
      cx.control = support[i];
      cx.target = last;
      out.gates.push_back(cx);
    }
    Gate rz = Gate::rotation(GateKind::RZ, last, g.slot);
    rz.param_scale = g.param_scale * (p.phase_pow() == 2 ? -1.0 : 1.0);
    out.gates.push_back(rz);
    for (std::size_t i = support.size() - 1; i-- > 0;) {
      Gate cx;
      cx.kind = GateKind::CNOT;
      cx.control = support[i];
      cx.target = last;
      out.gates.push_back(cx);
    }
    out.gates.insert(out.gates.end(), basis_out.begin(), basis_out.end());
  }
  return out;
}

GateCounts compile_and_count(const ParamCircuit& c) {
  const ParamCircuit compiled = compile_pauli_exponentials(c);
  GateCounts counts;
  counts.parameters = compiled.n_params;
  for (const Gate& g : compiled.gates) {
    if (g.is_two_qubit()) {
      ++counts.two_qubit;
    } else {
      ++counts.single_qubit;
    }
  }
  return counts;
}

}  // namespace cvqe
