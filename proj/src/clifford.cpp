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

#include "cvqe/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cvqe/simulator.hpp"

namespace cvqe {

namespace {

const char* kind_name(CliffordKind kind) {
  switch (kind) {
    case CliffordKind::H: return "H";
    case CliffordKind::S: return "S";
    case CliffordKind::Sdg: return "SDG";
    case CliffordKind::X: return "X";
    case CliffordKind::CNOT: return "CNOT";
    case CliffordKind::CZ: return "CZ";
  }
  return "?";
}

// One tableau row: the (x, z) bit pattern of a generator. Synthesis does not
// track signs; they are recovered by conjugating the actual terms afterwards.
struct Row {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool any() const { return (x | z) != 0; }
  void operator^=(const Row& o) {
    x ^= o.x;
    z ^= o.z;
  }
};

// Leading bit position of the concatenated (x, z) vector, or -1 if zero.
int lead_pos(const Row& r) {
  if (r.x) return std::countr_zero(r.x);
  if (r.z) return 64 + std::countr_zero(r.z);
  return -1;
}

bool get_pos(const Row& r, int pos) {
  return pos < 64 ? (r.x >> pos) & 1 : (r.z >> (pos - 64)) & 1;
}

// Reduced GF(2) basis of the rows; dependent rows drop out. Every group
// element is then a product of the surviving generators.
std::vector<Row> independent_rows(const std::vector<Row>& rows) {
  std::vector<Row> basis;
  for (Row r : rows) {
    for (const Row& b : basis) {
      if (get_pos(r, lead_pos(b))) r ^= b;
    }
    if (!r.any()) continue;
    const int lp = lead_pos(r);
    for (Row& b : basis) {
      if (get_pos(b, lp)) b ^= r;
    }
    basis.push_back(r);
  }
  return basis;
}

// Column actions of the gates on a whole tableau (sign-free mirror of
// conjugate_by_circuit).
struct Tableau {
  std::vector<Row> rows;

  void cnot(int ctl, int tgt) {
    for (Row& r : rows) {
      if (r.x >> ctl & 1) r.x ^= 1ull << tgt;
      if (r.z >> tgt & 1) r.z ^= 1ull << ctl;
    }
  }
  void s(int q) {
    for (Row& r : rows) {
      if (r.x >> q & 1) r.z ^= 1ull << q;
    }
  }
  void cz(int a, int b) {
    for (Row& r : rows) {
      if (r.x >> a & 1) r.z ^= 1ull << b;
      if (r.x >> b & 1) r.z ^= 1ull << a;
    }
  }
  void h(int q) {
    for (Row& r : rows) {
      const bool xb = r.x >> q & 1;
      const bool zb = r.z >> q & 1;
      if (xb != zb) {
        r.x ^= 1ull << q;
        r.z ^= 1ull << q;
      }
    }
  }
};

}  // namespace

CliffordGate CliffordGate::inverse() const {
  CliffordGate g = *this;
  if (kind == CliffordKind::S) {
    g.kind = CliffordKind::Sdg;
  } else if (kind == CliffordKind::Sdg) {
    g.kind = CliffordKind::S;
  }
  return g;  // H, X, CNOT, CZ are self-inverse
}

void CliffordCircuit::check_gates() const {
  for (const CliffordGate& g : gates) {
    if (g.target < 0 || g.target >= n_qubits) {
      throw std::invalid_argument("gate target out of range");
    }
    if (g.is_two_qubit()) {
      if (g.control < 0 || g.control >= n_qubits || g.control == g.target) {
        throw std::invalid_argument("bad control index");
      }
    }
  }
}

CliffordCircuit CliffordCircuit::inverse() const {
  CliffordCircuit inv;
  inv.n_qubits = n_qubits;
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    inv.gates.push_back(it->inverse());
  }
  return inv;
}

std::string CliffordCircuit::str() const {
  std::ostringstream out;
  for (const CliffordGate& g : gates) {
    out << kind_name(g.kind);
    if (g.is_two_qubit()) out << ' ' << g.control;
    out << ' ' << g.target << '\n';
  }
  return out.str();
}

PauliString conjugate_by_circuit(const PauliString& p,
                                 const CliffordCircuit& c) {
  if (p.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("circuit and Pauli string size mismatch");
  }
  std::uint64_t x = p.x_bits();
  std::uint64_t z = p.z_bits();
  int pow = p.phase_pow();
  for (const CliffordGate& g : c.gates) {
    const std::uint64_t t = 1ull << g.target;
    const std::uint64_t ctl = g.is_two_qubit() ? 1ull << g.control : 0;
    switch (g.kind) {
      case CliffordKind::H:
        if ((x & t) && (z & t)) pow += 2;
        if (((x ^ z) & t) != 0) {
          x ^= t;
          z ^= t;
        }
        break;
      case CliffordKind::S:
        if ((x & t) && (z & t)) pow += 2;
        if (x & t) z ^= t;
        break;
      case CliffordKind::Sdg:
        if ((x & t) && !(z & t)) pow += 2;
        if (x & t) z ^= t;
        break;
      case CliffordKind::X:
        if (z & t) pow += 2;
        break;
      case CliffordKind::CNOT: {
        const bool xc = x & ctl, zc = z & ctl, xt = x & t, zt = z & t;
        if (xc && zt && (xt == zc)) pow += 2;
        if (xc) x ^= t;
        if (zt) z ^= ctl;
        break;
      }
      case CliffordKind::CZ: {
        const bool xc = x & ctl, zc = z & ctl, xt = x & t, zt = z & t;
        if (xc && xt && (zc != zt)) pow += 2;
        if (xc) z ^= t;
        if (xt) z ^= ctl;
        break;
      }
    }
  }
  return PauliString(p.n_qubits(), x, z, pow);
}

CliffordCircuit diagonalize_group(const CommutingGroup& g) {
  if (g.terms.empty()) throw std::invalid_argument("empty group");
  const int n = g.terms.n_qubits();
  const auto& terms = g.terms.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commutes(terms[i].string, terms[j].string)) {
        throw std::invalid_argument("group terms do not pairwise commute");
      }
    }
  }

  std::vector<Row> raw;
  raw.reserve(terms.size());
  for (const PauliTerm& term : terms) {
    raw.push_back(Row{term.string.x_bits(), term.string.z_bits()});
  }
  Tableau t{independent_rows(raw)};

  CliffordCircuit circuit;
  circuit.n_qubits = n;

  // Reduced row echelon form of the X block via generator products; every
  // pivot column ends up with a single 1 and non-pivot rows become pure Z.
  std::vector<std::pair<std::size_t, int>> pivots;  // (row, column)
  std::vector<bool> used(t.rows.size(), false);
  for (int col = 0; col < n; ++col) {
    const std::uint64_t bit = 1ull << col;
    std::size_t found = t.rows.size();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (!used[r] && (t.rows[r].x & bit)) {
        found = r;
        break;
      }
    }
    if (found == t.rows.size()) continue;
    used[found] = true;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (r != found && (t.rows[r].x & bit)) t.rows[r] ^= t.rows[found];
    }
    pivots.emplace_back(found, col);
  }

  // (a) CNOTs clear the off-pivot X entries row by row; controls sit on the
  // single-1 pivot columns so no other row is disturbed.
  for (const auto& [row, col] : pivots) {
    for (int target = 0; target < n; ++target) {
      if (target == col || !(t.rows[row].x >> target & 1)) continue;
      circuit.gates.push_back(CliffordGate{CliffordKind::CNOT, target, col});
      t.cnot(col, target);
    }
  }

  // (b) Cancel the residual Z block on pivot columns: S on the diagonal and
  // CZ for the off-diagonal entries (symmetric by commutativity).
  for (const auto& [row, col] : pivots) {
    if (t.rows[row].z >> col & 1) {
      circuit.gates.push_back(CliffordGate{CliffordKind::S, col, -1});
      t.s(col);
    }
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t l = i + 1; l < pivots.size(); ++l) {
      if (t.rows[pivots[i].first].z >> pivots[l].second & 1) {
        circuit.gates.push_back(CliffordGate{
            CliffordKind::CZ, pivots[l].second, pivots[i].second});
        t.cz(pivots[i].second, pivots[l].second);
      }
    }
  }

  // (c) Rotate the remaining X pivots into Z.
  for (const auto& [row, col] : pivots) {
    circuit.gates.push_back(CliffordGate{CliffordKind::H, col, -1});
    t.h(col);
  }

  for (const Row& r : t.rows) {
    if (r.x != 0) throw std::logic_error("tableau elimination incomplete");
  }
  for (const PauliTerm& term : terms) {
    const PauliString image = conjugate_by_circuit(term.string, circuit);
    if (!is_diagonal(image) || image.phase_pow() % 2 != 0) {
      throw std::logic_error("synthesized circuit failed to diagonalize");
    }
  }
  return circuit;
}

SignedStabilizerGroup sign_assignment(const CommutingGroup& g,
                                      const CliffordCircuit& u, int n_e) {
  const int n = g.terms.n_qubits();
  if (n_e <= 0 || n_e > n) throw std::invalid_argument("bad electron count");
  const std::uint64_t occupied = (n_e == 64) ? ~0ull : (1ull << n_e) - 1ull;

  SignedStabilizerGroup group;
  group.index = g.index;
  group.n_e = n_e;
  group.elements.reserve(g.terms.size());
  for (const PauliTerm& term : g.terms.terms()) {
    const PauliString image = conjugate_by_circuit(term.string, u);
    if (!is_diagonal(image) || image.phase_pow() % 2 != 0) {
      throw std::invalid_argument("circuit does not diagonalize the group");
    }
    const int parity = std::popcount(image.z_bits() & occupied) & 1;
    // sign * (conjugation sign) * (-1)^parity = +1 on |HF>.
    const int sign_pow = (image.phase_pow() + 2 * parity) % 4;
    group.elements.push_back(term.string.with_phase_pow(sign_pow));
  }
  return group;
}

State stabilizer_state(const CliffordCircuit& u, int n_e) {
  State state = State::hartree_fock(u.n_qubits, n_e);
  const CliffordCircuit inverse = u.inverse();
  for (const CliffordGate& gate : inverse.gates) {
    apply_clifford_gate(state, gate);
  }
  return state;
}

}  // namespace cvqe
