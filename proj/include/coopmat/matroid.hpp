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

// Independence oracles for loopless matroids on a dense id space
// {0, ..., n-1}, the four concrete constructors, and the two derived
// constructions (restriction and pullback along a permutation).

#ifndef COOPMAT_MATROID_HPP_
#define COOPMAT_MATROID_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coopmat/subset.hpp"

namespace coopmat {

struct MatroidSpec;

struct UniformSpec {
  int n = 0;
  int rank = 0;
};

struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Elements of block b may be used at most capacities[b] times.
/// The blocks must partition {0, ..., n-1}.
struct PartitionSpec {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

/// Column matroid of a matrix over GF(prime). Element j is columns[j].
struct LinearSpec {
  int prime = 2;
  std::vector<std::vector<int>> columns;
};

struct RestrictionSpec {
  std::shared_ptr<const MatroidSpec> base;
  std::vector<int> subset;
};

struct PullbackSpec {
  std::shared_ptr<const MatroidSpec> base;
  std::vector<int> permutation;
};

/// Serializable description of a matroid. See docs/formats.md for the JSON
/// encoding.
struct MatroidSpec {
  std::variant<UniformSpec, GraphicSpec, PartitionSpec, LinearSpec,
               RestrictionSpec, PullbackSpec>
      value;
};

enum class MatroidKind {
  kUniform,
  kGraphic,
  kPartition,
  kLinear,
  kRestriction,
  kPullback,
  kPredicate,
};

std::string to_string(MatroidKind kind);

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws MalformedSpec unless `image` is a bijection on its index range.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int e) const { return image_[e]; }
  Subset operator()(Subset s) const;
  Permutation inverse() const;
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

namespace detail {
class MatroidImpl;
}

/// Immutable, cheaply copyable independence oracle.
///
/// `support()` is the set of elements the oracle may be asked about. It is
/// the whole ground set except for restrictions, which keep the parent's id
/// space and reject queries that leave the restricting set.
class Matroid {
 public:
  /// Wraps an arbitrary predicate without any axiom or loop check. Meant for
  /// test fixtures and for feeding verify_matroid_axioms.
  static Matroid from_predicate(int n, std::function<bool(Subset)> independent);

  int ground_size() const;
  Subset ground() const { return Subset::full(ground_size()); }
  Subset support() const;
  MatroidKind kind() const;
  /// Present whenever the oracle was produced from a spec (directly or via
  /// restrict/pullback of such an oracle).
  const std::optional<MatroidSpec>& spec() const;

  /// Throws OutOfRestriction if `s` leaves the support.
  bool is_independent(Subset s) const;
  /// True iff e is in the support and s + e is independent. `s` must lie in
  /// the support.
  bool can_add(Subset s, int e) const;

 private:
  explicit Matroid(std::shared_ptr<const detail::MatroidImpl> impl)
      : impl_(std::move(impl)) {}
  friend Matroid build_matroid(const MatroidSpec& spec);
  friend Matroid restrict(const Matroid& m, Subset x);
  friend Matroid pullback(const Matroid& m, const Permutation& pi);

  std::shared_ptr<const detail::MatroidImpl> impl_;
};

/// Throws LoopDetected when some singleton is dependent, MalformedSpec for
/// any other ill-formed input.
Matroid build_matroid(const MatroidSpec& spec);

/// Ground size a spec describes, without building it.
int spec_ground_size(const MatroidSpec& spec);

/// Greedy rank: grows an independent set over `s` in ascending id order.
int rank(const Matroid& m, Subset s);

/// The unique circuit in a + e, or nullopt when a + e is independent.
/// Throws NotIndependent if `a` is dependent.
std::optional<Subset> fundamental_circuit(const Matroid& m, Subset a, int e);

/// Independent sets of the result are the independent subsets of x.
Matroid restrict(const Matroid& m, Subset x);

/// S is independent in the result iff pi(S) is independent in m.
Matroid pullback(const Matroid& m, const Permutation& pi);

struct AxiomReport {
  enum class Violation {
    kNone,
    kEmptyDependent,
    kLoop,
    kHeredity,  // smaller (dependent) is a subset of larger (independent)
    kExchange,  // no e in larger - smaller extends smaller
  };
  Violation violation = Violation::kNone;
  Subset smaller;
  Subset larger;
  int element = -1;  // the loop, for kLoop

  bool ok() const { return violation == Violation::kNone; }
  std::string describe() const;
};

/// Exhaustive check of the independence axioms over the support.
/// Throws TooLarge when the support exceeds kMaxAxiomCheckSize elements.
inline constexpr int kMaxAxiomCheckSize = 16;
AxiomReport verify_matroid_axioms(const Matroid& m);

}  // namespace coopmat

#endif  // COOPMAT_MATROID_HPP_
