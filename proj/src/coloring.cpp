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

#include "coopmat/coloring.hpp"

#include <algorithm>
#include <string>

#include "coopmat/errors.hpp"

namespace coopmat {

bool Coloring::complete() const {
  return std::all_of(colors_.begin(), colors_.end(),
                     [](int c) { return c != 0; });
}

Subset Coloring::color_class(int c) const {
  Subset s;
  for (int e = 0; e < size(); ++e) {
    if (colors_[e] == c) s.insert(e);
  }
  return s;
}

Subset Coloring::colored() const { return color_class(0).complement(size()); }

ListAssignment::ListAssignment(int palette, int list_size,
                               std::vector<std::vector<int>> lists)
    : palette_(palette), list_size_(list_size), lists_(std::move(lists)) {
  if (list_size_ < 0 || palette_ < list_size_) {
    throw MalformedSpec("list assignment needs 0 <= k <= t (k=" +
                        std::to_string(list_size_) +
                        ", t=" + std::to_string(palette_) + ")");
  }
  if (size() > kMaxGroundSize) throw MalformedSpec("too many lists");
  for (int e = 0; e < size(); ++e) {
    std::vector<int>& l = lists_[e];
    std::sort(l.begin(), l.end());
    if (static_cast<int>(l.size()) != list_size_) {
      throw MalformedSpec("list of element " + std::to_string(e) +
                          " does not have size " + std::to_string(list_size_));
    }
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw MalformedSpec("list of element " + std::to_string(e) +
                          " repeats a color");
    }
    if (!l.empty() && (l.front() < 1 || l.back() > palette_)) {
      throw MalformedSpec("list of element " + std::to_string(e) +
                          " uses a color outside 1.." +
                          std::to_string(palette_));
    }
  }
}

ListAssignment ListAssignment::full(int n, int palette) {
  std::vector<int> all(palette);
  for (int c = 0; c < palette; ++c) all[c] = c + 1;
  return ListAssignment(palette, palette,
                        std::vector<std::vector<int>>(n, all));
}

bool ListAssignment::allows(int e, int c) const {
  return std::binary_search(lists_[e].begin(), lists_[e].end(), c);
}

Subset ListAssignment::admissible(int c) const {
  Subset s;
  for (int e = 0; e < size(); ++e) {
    if (allows(e, c)) s.insert(e);
  }
  return s;
}

int chromatic_number(const Matroid& m) {
  const Subset support = m.support();
  if (support.empty()) return 0;
  for (int k = 1; k <= support.size(); ++k) {
    MatroidSystem copies(k, SystemSlot{m, support});
    if (std::holds_alternative<PartitionState>(
            partition_ground_set(std::move(copies), support))) {
      return k;
    }
  }
  // Only an oracle with a loop fails with one color per element.
  throw LoopDetected("support cannot be covered; the oracle has a loop");
}

ChromaticFormula chromatic_number_formula_bf(const Matroid& m) {
  const Subset support = m.support();
  if (support.size() > kMaxFormulaSize) {
    throw TooLarge("formula enumeration needs |E| <= " +
                   std::to_string(kMaxFormulaSize));
  }
  ChromaticFormula best;
  int best_size = 0;
  int best_rank = 1;
  for_each_subset(support, [&](Subset a) {
    if (a.empty()) return;
    const int r = rank(m, a);
    if (r == 0) {
      throw LoopDetected("set " + a.to_string() + " has rank 0");
    }
    // Compare |a| / r against best_size / best_rank exactly.
    if (a.size() * best_rank > best_size * r) {
      best_size = a.size();
      best_rank = r;
      best.argmax = a;
    }
  });
  best.value = best_size == 0 ? 0 : (best_size + best_rank - 1) / best_rank;
  return best;
}

std::variant<Coloring, DeficiencyCertificate> is_k_colorable(const Matroid& m,
                                                             int k) {
  if (k < 1) throw Error("k must be at least 1");
  const Subset support = m.support();
  auto result =
      partition_ground_set(MatroidSystem(k, SystemSlot{m, support}), support);
  if (auto* cert = std::get_if<DeficiencyCertificate>(&result)) return *cert;
  const auto& state = std::get<PartitionState>(result);
  Coloring f(m.ground_size());
  for (int i = 0; i < k; ++i) {
    for (int e : state.part(i)) f.set(e, i + 1);
  }
  return f;
}

Coloring coop_list_color(const std::vector<Matroid>& ns,
                         const ListAssignment& lists, PreconditionCheck check) {
  const int n = lists.size();
  const int t = lists.palette();
  const int k = lists.list_size();
  if (static_cast<int>(ns.size()) != t) {
    throw Error("expected " + std::to_string(t) + " matroids, got " +
                std::to_string(ns.size()));
  }
  for (const Matroid& m : ns) {
    if (m.ground_size() != n) {
      throw Error("matroid ground size " + std::to_string(m.ground_size()) +
                  " differs from the " + std::to_string(n) + " lists");
    }
  }
  if (n == 0) return Coloring(0);

  const bool eager = check == PreconditionCheck::kAlways ||
                     (check == PreconditionCheck::kAuto &&
                      n <= kEagerPreconditionSize);
  if (eager) {
    if (k == 0) {
      throw PreconditionViolated("empty lists on a nonempty ground set",
                                 DeficiencyCertificate{Subset::full(n), {}});
    }
    for (int i = 0; i < t; ++i) {
      auto verdict = is_k_colorable(ns[i], k);
      if (auto* cert = std::get_if<DeficiencyCertificate>(&verdict)) {
        throw PreconditionViolated("matroid " + std::to_string(i + 1) +
                                       " is not " + std::to_string(k) +
                                       "-colorable",
                                   *cert);
      }
    }
  }

  MatroidSystem system;
  for (int i = 0; i < t; ++i) {
    system.push_back({ns[i], lists.admissible(i + 1)});
  }
  auto result = partition_ground_set(std::move(system), Subset::full(n));
  if (auto* cert = std::get_if<DeficiencyCertificate>(&result)) {
    throw PreconditionViolated(
        "no list coloring exists; set " + cert->x.to_string() +
            " exceeds its restricted ranks",
        *cert);
  }
  const auto& state = std::get<PartitionState>(result);
  Coloring f(n);
  for (int i = 0; i < t; ++i) {
    for (int e : state.part(i)) f.set(e, i + 1);
  }
  return f;
}

Coloring cooperative_color(const std::vector<Matroid>& ms,
                           PreconditionCheck check) {
  const int k = static_cast<int>(ms.size());
  const int n = ms.empty() ? 0 : ms.front().ground_size();
  return coop_list_color(ms, ListAssignment::full(n, k), check);
}

bool is_valid_list_coloring(const std::vector<Matroid>& ns,
                            const ListAssignment& lists, const Coloring& f) {
  if (f.size() != lists.size() || !f.complete()) return false;
  if (static_cast<int>(ns.size()) != lists.palette()) return false;
  for (int e = 0; e < f.size(); ++e) {
    if (!lists.allows(e, f.color(e))) return false;
  }
  for (int i = 0; i < lists.palette(); ++i) {
    const Subset cls = f.color_class(i + 1);
    if (!cls.is_subset_of(ns[i].support())) return false;
    if (!ns[i].is_independent(cls)) return false;
  }
  return true;
}

std::vector<Subset> forest_permutation_decomposition(
    const GraphicSpec& graph, const std::vector<Permutation>& perms) {
  const Matroid base = build_matroid(MatroidSpec{graph});
  const int k = static_cast<int>(perms.size()) + 1;
  auto verdict = is_k_colorable(base, k);
  if (auto* cert = std::get_if<DeficiencyCertificate>(&verdict)) {
    throw ArboricityTooHigh("arboricity exceeds " + std::to_string(k) +
                                "; dense edge set " + cert->x.to_string(),
                            *cert);
  }
  std::vector<Matroid> ms{base};
  for (const Permutation& pi : perms) ms.push_back(pullback(base, pi));
  const Coloring f = cooperative_color(ms);
  std::vector<Subset> classes;
  for (int i = 1; i <= k; ++i) classes.push_back(f.color_class(i));
  return classes;
}

}  // namespace coopmat
