// Copyright 2026 The Authors.
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

// Matroid partitioning by shortest augmenting paths in the exchange digraph.
//
// A system is a list of slots (M_i, E_i): slot i may only hold elements of
// E_i, and what it holds must be independent in M_i. Restricting M_i to E_i
// is expressed through the admissible set, so every slot shares one id space.

#ifndef COOPMAT_PARTITION_HPP_
#define COOPMAT_PARTITION_HPP_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "coopmat/errors.hpp"
#include "coopmat/matroid.hpp"
#include "coopmat/subset.hpp"

namespace coopmat {

struct SystemSlot {
  Matroid matroid;
  Subset admissible;
};
using MatroidSystem = std::vector<SystemSlot>;

/// Every slot admits its whole support.
MatroidSystem full_system(const std::vector<Matroid>& matroids);

/// Pairwise-disjoint independent parts A_i ⊆ E_i and their union.
class PartitionState {
 public:
  /// Admissible sets are clipped to each matroid's support.
  explicit PartitionState(MatroidSystem system);

  int slots() const { return static_cast<int>(parts_.size()); }
  const MatroidSystem& system() const { return *system_; }
  const std::vector<Subset>& parts() const { return parts_; }
  Subset part(int slot) const { return parts_[slot]; }
  Subset covered() const { return covered_; }
  /// Slot holding e, or -1.
  int slot_of(int e) const;

 private:
  friend class Augmenter;

  std::shared_ptr<const MatroidSystem> system_;
  std::vector<Subset> parts_;
  Subset covered_;
};

/// Elements reached by a failed augmenting search.
struct ReachableSet {
  Subset elements;
};

/// A set X with sum_i r_i(X ∩ E_i) < |X|: no partition covers X.
struct DeficiencyCertificate {
  Subset x;
  std::vector<int> ranks;  // r_i(X ∩ E_i), one per slot

  int rank_sum() const;
  int deficiency() const { return x.size() - rank_sum(); }
};

/// Recomputes the ranks through fresh oracle calls and checks the strict
/// inequality.
bool certificate_holds(const MatroidSystem& system,
                       const DeficiencyCertificate& cert);

/// Thrown when a routine's matroid hypothesis fails; carries the proof.
class PreconditionViolated : public Error {
 public:
  PreconditionViolated(const std::string& what, DeficiencyCertificate cert)
      : Error(what), certificate_(std::move(cert)) {}
  const DeficiencyCertificate& certificate() const { return certificate_; }

 private:
  DeficiencyCertificate certificate_;
};

/// Tries to cover one more element. Throws NotUncovered if e is covered.
std::variant<PartitionState, ReachableSet> augment(const PartitionState& state,
                                                   int e);

/// Covers `target`, inserting elements in ascending id order. On failure
/// the certificate is the set reachable from every uncovered element.
std::variant<PartitionState, DeficiencyCertificate> partition_ground_set(
    MatroidSystem system, Subset target);

/// Covers a largest partitionable subset of `target`.
PartitionState max_partition(MatroidSystem system, Subset target);

/// Rank of `a` in the union matroid.
int union_rank(const MatroidSystem& system, Subset a);

struct UnionRankFormula {
  int value = 0;
  Subset minimizer;
};

inline constexpr int kMaxFormulaSize = 20;

/// min over X ⊆ a of sum_i r_i(X ∩ E_i) + |a - X|, by enumeration. Ties go to
/// the least mask. Throws TooLarge above kMaxFormulaSize elements.
UnionRankFormula union_rank_formula_bf(const MatroidSystem& system, Subset a);

}  // namespace coopmat

#endif  // COOPMAT_PARTITION_HPP_
