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

#include "coopmat/partition.hpp"

#include <array>
#include <deque>
#include <numeric>

namespace coopmat {

MatroidSystem full_system(const std::vector<Matroid>& matroids) {
  MatroidSystem system;
  system.reserve(matroids.size());
  for (const Matroid& m : matroids) system.push_back({m, m.support()});
  return system;
}

PartitionState::PartitionState(MatroidSystem system) {
  for (SystemSlot& slot : system) slot.admissible &= slot.matroid.support();
  parts_.assign(system.size(), Subset{});
  system_ = std::make_shared<const MatroidSystem>(std::move(system));
}

int PartitionState::slot_of(int e) const {
  if (!covered_.contains(e)) return -1;
  for (int i = 0; i < slots(); ++i) {
    if (parts_[i].contains(e)) return i;
  }
  return -1;
}

int DeficiencyCertificate::rank_sum() const {
  return std::accumulate(ranks.begin(), ranks.end(), 0);
}

bool certificate_holds(const MatroidSystem& system,
                       const DeficiencyCertificate& cert) {
  int sum = 0;
  for (const SystemSlot& slot : system) {
    sum += rank(slot.matroid, cert.x & slot.admissible & slot.matroid.support());
  }
  return sum < cert.x.size();
}

// Breadth-first search over the exchange digraph. Arc x -> y (through slot
// i) means x enters A_i and y leaves it; a sink is a slot x enters freely.
class Augmenter {
 public:
  explicit Augmenter(PartitionState& state) : state_(state) {}

  // Returns true and applies the path on success; otherwise `reached` holds
  // every element the search touched.
  bool run(Subset sources, Subset& reached) {
    const MatroidSystem& system = *state_.system_;
    std::deque<int> queue;
    for (int s : sources) {
      queue.push_back(s);
      prev_[s] = -1;
    }
    reached = sources;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int i = 0; i < state_.slots(); ++i) {
        const SystemSlot& slot = system[i];
        const Subset part = state_.parts_[i];
        if (!slot.admissible.contains(x) || part.contains(x)) continue;
        std::optional<Subset> circuit =
            fundamental_circuit(slot.matroid, part, x);
        if (!circuit) {
          apply(x, i);
          return true;
        }
        for (int y : circuit->without(x)) {
          if (reached.contains(y)) continue;
          reached.insert(y);
          prev_[y] = x;
          via_[y] = i;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

 private:
  void move(int x, int slot) {
    const int from = state_.slot_of(x);
    if (from >= 0) state_.parts_[from].erase(x);
    state_.parts_[slot].insert(x);
    state_.covered_.insert(x);
  }

  void apply(int x, int slot) {
    move(x, slot);
    for (int cur = x; prev_[cur] >= 0; cur = prev_[cur]) {
      // cur has left via_[cur]; its predecessor takes the vacated place.
      move(prev_[cur], via_[cur]);
    }
  }

  PartitionState& state_;
  std::array<int, kMaxGroundSize> prev_{};
  std::array<int, kMaxGroundSize> via_{};
};

std::variant<PartitionState, ReachableSet> augment(const PartitionState& state,
                                                   int e) {
  if (state.covered().contains(e)) {
    throw NotUncovered("element " + std::to_string(e) + " is already covered");
  }
  PartitionState next = state;
  Subset reached;
  if (Augmenter(next).run(Subset::singleton(e), reached)) return next;
  return ReachableSet{reached};
}

namespace {

// Inserts every element of target; returns the uncovered remainder.
Subset fill(PartitionState& state, Subset target) {
  Subset uncovered;
  for (int e : target) {
    Subset reached;
    if (!Augmenter(state).run(Subset::singleton(e), reached)) uncovered.insert(e);
  }
  return uncovered;
}

}  // namespace

std::variant<PartitionState, DeficiencyCertificate> partition_ground_set(
    MatroidSystem system, Subset target) {
  PartitionState state(std::move(system));
  const Subset uncovered = fill(state, target);
  if (uncovered.empty()) return state;

  // An element that once failed keeps failing, so a joint search from all
  // of them cannot succeed either.
  Subset reached;
  [[maybe_unused]] const bool grew = Augmenter(state).run(uncovered, reached);
  DeficiencyCertificate cert{reached, {}};
  for (const SystemSlot& slot : state.system()) {
    cert.ranks.push_back(rank(slot.matroid, reached & slot.admissible));
  }
  return cert;
}

PartitionState max_partition(MatroidSystem system, Subset target) {
  PartitionState state(std::move(system));
  fill(state, target);
  return state;
}

int union_rank(const MatroidSystem& system, Subset a) {
  return max_partition(system, a).covered().size();
}

UnionRankFormula union_rank_formula_bf(const MatroidSystem& system, Subset a) {
  if (a.size() > kMaxFormulaSize) {
    throw TooLarge("formula enumeration needs |A| <= " +
                   std::to_string(kMaxFormulaSize));
  }
  UnionRankFormula best{a.size() + 1, Subset{}};
  for_each_subset(a, [&](Subset x) {
    int value = (a - x).size();
    for (const SystemSlot& slot : system) {
      value += rank(slot.matroid, x & slot.admissible & slot.matroid.support());
    }
    if (value < best.value) best = {value, x};
  });
  return best;
}

}  // namespace coopmat
