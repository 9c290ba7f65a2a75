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

#include "cvqe/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <tuple>

namespace cvqe {

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
}

bool commutes_with_group(const PauliString& s, const CommutingGroup& g) {
  for (const PauliTerm& term : g.terms.terms()) {
    if (!commutes(s, term.string)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t hamiltonian_hash(const PauliSum& h) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  const std::uint64_t n = static_cast<std::uint64_t>(h.n_qubits());
  hash_bytes(hash, &n, sizeof(n));
  for (const PauliTerm& term : h.terms()) {
    const std::uint64_t x = term.string.x_bits();
    const std::uint64_t z = term.string.z_bits();
    hash_bytes(hash, &x, sizeof(x));
    hash_bytes(hash, &z, sizeof(z));
    hash_bytes(hash, &term.coefficient, sizeof(term.coefficient));
  }
  return hash;
}

std::pair<CommutingGroup, PauliSum> extract_z_group(const PauliSum& h) {
  if (h.empty()) throw std::invalid_argument("empty Hamiltonian");
  PauliSum diagonal(h.n_qubits());
  PauliSum remainder(h.n_qubits());
  for (const PauliTerm& term : h.terms()) {
    if (is_diagonal(term.string)) {
      diagonal.add_term(term.coefficient, term.string);
    } else {
      remainder.add_term(term.coefficient, term.string);
    }
  }
  CommutingGroup z_group{std::move(diagonal), 1, true};
  return {std::move(z_group), std::move(remainder)};
}

Partition partition(const PauliSum& h) {
  auto [z_group, rest] = extract_z_group(h);

  Partition result;
  result.source_hash = hamiltonian_hash(h);
  if (!z_group.terms.empty()) result.groups.push_back(std::move(z_group));

  std::vector<PauliTerm> pending(rest.terms().begin(), rest.terms().end());
  std::sort(pending.begin(), pending.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              const double ma = std::abs(a.coefficient);
              const double mb = std::abs(b.coefficient);
              if (ma != mb) return ma > mb;
              return std::tuple(a.string.x_bits(), a.string.z_bits()) <
                     std::tuple(b.string.x_bits(), b.string.z_bits());
            });

  const std::size_t first_open = result.groups.size();
  for (const PauliTerm& term : pending) {
    bool placed = false;
    for (std::size_t g = first_open; g < result.groups.size(); ++g) {
      if (commutes_with_group(term.string, result.groups[g])) {
        result.groups[g].terms.add_term(term.coefficient, term.string);
        placed = true;
        break;
      }
    }
    if (!placed) {
      PauliSum sum(h.n_qubits());
      sum.add_term(term.coefficient, term.string);
      result.groups.push_back(CommutingGroup{
          std::move(sum), static_cast<int>(result.groups.size()) + 1, false});
    }
  }
  return result;
}

Partition order_groups(const Partition& p) {
  Partition result = p;
  auto begin = result.groups.begin();
  if (begin != result.groups.end() && begin->is_z_only) ++begin;
  std::stable_sort(begin, result.groups.end(),
                   [](const CommutingGroup& a, const CommutingGroup& b) {
                     return a.one_norm() > b.one_norm();
                   });
  return result;
}

}  // namespace cvqe
