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

#include "cvqe/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

void check_n_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 64) {
    throw std::invalid_argument("n_qubits must be in [1, 64], got " +
                                std::to_string(n_qubits));
  }
}

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits, int phase_pow)
    : n_qubits_(n_qubits),
      x_(x_bits),
      z_(z_bits),
      phase_pow_(((phase_pow % 4) + 4) % 4) {
  check_n_qubits(n_qubits);
  const std::uint64_t mask =
      n_qubits == 64 ? ~0ull : ((1ull << n_qubits) - 1ull);
  if ((x_ & ~mask) != 0 || (z_ & ~mask) != 0) {
    throw std::invalid_argument("Pauli bits extend past the qubit count");
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits, 0, 0, 0);
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[phase_pow_];
}

char PauliString::letter(int qubit) const {
  const bool x = x_bit(qubit);
  const bool z = z_bit(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return popcount(x_ | z_); }

PauliString PauliString::with_phase_pow(int phase_pow) const {
  return PauliString(n_qubits_, x_, z_, phase_pow);
}

std::string PauliString::str() const {
  if (is_identity()) return "I";
  std::ostringstream out;
  bool first = true;
  for (int q = 0; q < n_qubits_; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!first) out << ' ';
    out << c << q;
    first = false;
  }
  return out.str();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli string size mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
  const std::uint64_t xc = a.x_bits() ^ b.x_bits();
  const std::uint64_t zc = a.z_bits() ^ b.z_bits();
  // Write each string as i^(#Y) X^x Z^z; commuting Z^za past X^xb costs
  // (-1)^(za.xb), and the Y count of the product is folded back out.
  int pow = a.phase_pow() + b.phase_pow();
  pow += popcount(a.x_bits() & a.z_bits());
  pow += popcount(b.x_bits() & b.z_bits());
  pow += 2 * popcount(a.z_bits() & b.x_bits());
  pow -= popcount(xc & zc);
  return PauliString(a.n_qubits(), xc, zc, pow);
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli string size mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
  const int form = popcount(a.x_bits() & b.z_bits()) +
                   popcount(a.z_bits() & b.x_bits());
  return form % 2 == 0;
}

bool is_diagonal(const PauliString& a) { return a.x_bits() == 0; }

PauliString parse_pauli(const std::string& text, int n_qubits) {
  check_n_qubits(n_qubits);
  std::istringstream in(text);
  std::string token;
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  bool saw_factor = false;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "I") {
      saw_identity = true;
      continue;
    }
    const char letter = token[0];
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw std::invalid_argument("unknown Pauli letter in '" + token + "'");
    }
    std::size_t pos = 0;
    int index = -1;
    try {
      index = std::stoi(token.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed Pauli factor '" + token + "'");
    }
    if (pos + 1 != token.size() || index < 0) {
      throw std::invalid_argument("malformed Pauli factor '" + token + "'");
    }
    if (index >= n_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(index) +
                                  " out of range for " +
                                  std::to_string(n_qubits) + " qubits");
    }
    const std::uint64_t bit = 1ull << index;
    if ((x | z) & bit) {
      throw std::invalid_argument("duplicate qubit index " +
                                  std::to_string(index));
    }
    if (letter == 'X' || letter == 'Y') x |= bit;
    if (letter == 'Z' || letter == 'Y') z |= bit;
    saw_factor = true;
  }
  if (!saw_factor && !saw_identity) {
    throw std::invalid_argument("empty Pauli text");
  }
  if (saw_identity && saw_factor) {
    throw std::invalid_argument("'I' cannot be mixed with indexed factors");
  }
  return PauliString(n_qubits, x, z, 0);
}

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
  check_n_qubits(n_qubits);
  for (const PauliTerm& term : terms) add_term(term.coefficient, term.string);
}

void PauliSum::add_term(double coefficient, const PauliString& string) {
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("non-finite coefficient");
  }
  if (string.n_qubits() != n_qubits_) {
    throw std::invalid_argument("term qubit count mismatch");
  }
  if (string.phase_pow() % 2 != 0) {
    throw std::invalid_argument("Hamiltonian terms must carry a real sign");
  }
  double c = coefficient;
  PauliString s = string;
  if (string.phase_pow() == 2) {
    c = -c;
    s = string.with_phase_pow(0);
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].string.x_bits() == s.x_bits() &&
        terms_[i].string.z_bits() == s.z_bits()) {
      terms_[i].coefficient += c;
      if (std::abs(terms_[i].coefficient) < kCoefficientCutoff) {
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
      }
      return;
    }
  }
  if (std::abs(c) >= kCoefficientCutoff) {
    terms_.push_back(PauliTerm{c, s});
  }
}

double one_norm(const PauliSum& h) {
  double total = 0.0;
  for (const PauliTerm& term : h.terms()) total += std::abs(term.coefficient);
  return total;
}

}  // namespace cvqe
