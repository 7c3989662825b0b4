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

#ifndef COOPMAT_COLORING_HPP_
#define COOPMAT_COLORING_HPP_

#include <variant>
#include <vector>

#include "coopmat/matroid.hpp"
#include "coopmat/partition.hpp"
#include "coopmat/subset.hpp"

namespace coopmat {

/// Partial map element -> color in 1..t; 0 marks an uncolored element.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(n, 0) {}

  int size() const { return static_cast<int>(colors_.size()); }
  int color(int e) const { return colors_[e]; }
  void set(int e, int c) { colors_[e] = c; }
  bool complete() const;
  Subset color_class(int c) const;
  Subset colored() const;
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> colors_;
};

/// Lists L(e) ⊆ {1..t}, each of size exactly k, with t >= k.
class ListAssignment {
 public:
  /// Throws MalformedSpec on an invalid assignment. Lists are stored sorted.
  ListAssignment(int palette, int list_size,
                 std::vector<std::vector<int>> lists);
  /// L(e) = {1..t} for every element.
  static ListAssignment full(int n, int palette);

  int palette() const { return palette_; }
  int list_size() const { return list_size_; }
  int size() const { return static_cast<int>(lists_.size()); }
  const std::vector<int>& list(int e) const { return lists_[e]; }
  bool allows(int e, int c) const;
  /// E_c = {e : c ∈ L(e)}.
  Subset admissible(int c) const;

 private:
  int palette_;
  int list_size_;
  std::vector<std::vector<int>> lists_;
};

/// χ(M) as the least k for which k copies of M partition the support.
/// 0 for an empty support.
int chromatic_number(const Matroid& m);

struct ChromaticFormula {
  int value = 0;
  Subset argmax;
};

/// max over nonempty A of ceil(|A| / r(A)) by enumeration. The witness A
/// maximizes the exact density |A| / r(A), least mask first among ties.
/// Throws TooLarge above kMaxFormulaSize, LoopDetected if some r(A) = 0.
ChromaticFormula chromatic_number_formula_bf(const Matroid& m);

/// A k-coloring, or a set X with k * r(X) < |X|.
std::variant<Coloring, DeficiencyCertificate> is_k_colorable(const Matroid& m,
                                                             int k);

enum class PreconditionCheck {
  kAuto,    // verify χ(N_i) <= k when the ground set has <= 12 elements
  kAlways,
  kNever,
};

inline constexpr int kEagerPreconditionSize = 12;

/// Coloring f with f(e) ∈ L(e) and f^{-1}(i) independent in N_i, built by
/// partitioning E over the slots (N_i, {e : i ∈ L(e)}).
///
/// Throws PreconditionViolated when χ(N_i) > k for some checked N_i, or when
/// the partition fails; the certificate then proves the hypothesis false.
Coloring coop_list_color(const std::vector<Matroid>& ns,
                         const ListAssignment& lists,
                         PreconditionCheck check = PreconditionCheck::kAuto);

/// coop_list_color with t = k and full lists.
Coloring cooperative_color(const std::vector<Matroid>& ms,
                           PreconditionCheck check = PreconditionCheck::kAuto);

/// True iff f is complete, respects the lists, and every class f^{-1}(i) is
/// independent in N_i (fresh oracle calls).
bool is_valid_list_coloring(const std::vector<Matroid>& ns,
                            const ListAssignment& lists, const Coloring& f);

class ArboricityTooHigh : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Classes F_1..F_k partitioning the edges with F_1 a forest and
/// perms[i-2](F_i) a forest for i >= 2; k = perms.size() + 1.
std::vector<Subset> forest_permutation_decomposition(
    const GraphicSpec& graph, const std::vector<Permutation>& perms);

}  // namespace coopmat

#endif  // COOPMAT_COLORING_HPP_
