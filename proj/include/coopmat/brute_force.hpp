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

// Exhaustive reference answers. Everything here talks to the matroids only
// through is_independent and never calls into the partition engine.

#ifndef COOPMAT_BRUTE_FORCE_HPP_
#define COOPMAT_BRUTE_FORCE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "coopmat/coloring.hpp"
#include "coopmat/matroid.hpp"

namespace coopmat::bf {

inline constexpr std::uint64_t kMaxColorings = 10'000'000;
inline constexpr int kMaxCountSize = 20;
inline constexpr int kMaxListSize = 12;

/// First list-respecting cooperative coloring in lexicographic order
/// (element 0 most significant, colors ascending), or nullopt.
/// Throws TooLarge when t^|E| exceeds kMaxColorings.
std::optional<Coloring> coop_colorable_bf(const std::vector<Matroid>& ns,
                                          const ListAssignment& lists);

/// Number of independent subsets of the support.
std::uint64_t count_independent_sets(const Matroid& m);

/// All independent subsets of the support in ascending mask order.
std::vector<Subset> list_independent_sets(const Matroid& m);

/// Largest |I| over independent I ⊆ s.
int max_independent_size(const Matroid& m, Subset s);

/// k * r(X) >= |X| for every X in the support, with r by enumeration.
/// Returns the least violating X when there is one.
std::optional<Subset> k_colorability_violation(const Matroid& m, int k);

}  // namespace coopmat::bf

#endif  // COOPMAT_BRUTE_FORCE_HPP_
