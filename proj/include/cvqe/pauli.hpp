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
#include <string>
#include <vector>

namespace cvqe {

/// Symplectic representation of a signed Pauli string on n qubits.
///
/// Qubit j carries I iff (x_j, z_j) = (0, 0), X iff (1, 0), Z iff (0, 1)
/// and Y iff (1, 1); the matrix represented is phase() * (sigma_0 ⊗ ... ⊗
/// sigma_{n-1}). Bit j of x_bits/z_bits belongs to qubit j. The phase is
/// stored as a power of i, so Hamiltonian terms and stabilizer elements
/// keep phase_pow in {0, 2} (+1 or -1).
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
              int phase_pow = 0);

  /// Identity string on n qubits.
  static PauliString identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  /// Power of i in the stored phase, in {0, 1, 2, 3}.
  int phase_pow() const { return phase_pow_; }
  std::complex<double> phase() const;

  bool x_bit(int qubit) const { return (x_ >> qubit) & 1u; }
  bool z_bit(int qubit) const { return (z_ >> qubit) & 1u; }

  /// Letter at the given qubit: 'I', 'X', 'Y' or 'Z'.
  char letter(int qubit) const;

  /// Number of non-identity factors.
  int weight() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }

  PauliString with_phase_pow(int phase_pow) const;

  /// Text form such as "X0 Z2" or "I"; the sign/phase is not rendered.
  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_pow_ = 0;
};

/// Matrix product a * b with the accumulated phase tracked exactly.
PauliString multiply(const PauliString& a, const PauliString& b);

/// True iff the symplectic form sum_j (a.x_j b.z_j + a.z_j b.x_j) is even,
/// equivalently the represented matrices commute.
bool commutes(const PauliString& a, const PauliString& b);

/// True iff the string has no X component (a Z/I-only string).
bool is_diagonal(const PauliString& a);

/// Parses a whitespace-separated list of factors "X<i>", "Y<i>", "Z<i>"
/// (or the literal "I") into a phase +1 string. Duplicate or out-of-range
/// indices and unknown letters raise std::invalid_argument.
PauliString parse_pauli(const std::string& text, int n_qubits);

/// One coefficient-weighted Pauli string; the string itself carries phase +1,
/// any sign lives in the coefficient.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// Coefficient-weighted list of Pauli strings sharing one qubit count.
///
/// Construction normalizes: terms with identical bit patterns are merged by
/// summing coefficients (first occurrence keeps its position) and terms with
/// |coefficient| < 1e-12 are dropped.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Appends a term, merging it into an existing equal-pattern term if any.
  void add_term(double coefficient, const PauliString& string);

  friend bool operator==(const PauliSum& a, const PauliSum& b) = default;

  static constexpr double kCoefficientCutoff = 1e-12;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Sum of |c_k| over all terms.
double one_norm(const PauliSum& h);

}  // namespace cvqe
