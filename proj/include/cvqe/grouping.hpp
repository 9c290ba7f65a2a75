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

#include <cstdint>
#include <utility>
#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// A sub-Hamiltonian whose terms pairwise commute as full operators.
struct CommutingGroup {
  PauliSum terms;
  int index = 0;         // 1-based discovery index within the partition
  bool is_z_only = false;

  double one_norm() const { return cvqe::one_norm(terms); }
};

/// An ordered cover of a Hamiltonian by commuting groups. Group term
/// multisets are disjoint and reconstruct the source Hamiltonian exactly;
/// when the source has diagonal terms they form group 1.
struct Partition {
  std::vector<CommutingGroup> groups;
  std::uint64_t source_hash = 0;
};

/// FNV-1a over the canonical byte serialization (qubit count, bit patterns,
/// coefficient bytes). Used to tie emitted partitions to their input.
std::uint64_t hamiltonian_hash(const PauliSum& h);

/// Splits h into its Z/I-only terms (identity included) and the remainder.
/// The returned group keeps is_z_only set even when empty.
std::pair<CommutingGroup, PauliSum> extract_z_group(const PauliSum& h);

/// Partitions h into mutually commuting groups: the z-only group first (when
/// nonempty), then greedy insertion of the remaining terms sorted by
/// descending |coefficient| (ties by bit pattern). Each term joins the first
/// group it fully commutes with, else opens a new group.
Partition partition(const PauliSum& h);

/// Reorders a partition: the z-only group stays first, the remaining groups
/// sort by descending 1-norm with ties broken by ascending discovery index.
Partition order_groups(const Partition& p);

}  // namespace cvqe
