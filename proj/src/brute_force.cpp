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

#include "coopmat/brute_force.hpp"

#include <algorithm>
#include <string>

#include "coopmat/errors.hpp"

namespace coopmat::bf {

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const std::vector<Matroid>& ns, const ListAssignment& lists)
      : ns_(ns), lists_(lists), classes_(ns.size()), f_(lists.size()) {}

  bool run(int e) {
    if (e == lists_.size()) return true;
    for (int c : lists_.list(e)) {
      const Matroid& m = ns_[c - 1];
      // Prune only by heredity: a dependent class stays dependent.
      if (!m.can_add(classes_[c - 1], e)) continue;
      classes_[c - 1].insert(e);
      f_.set(e, c);
      if (run(e + 1)) return true;
      classes_[c - 1].erase(e);
      f_.set(e, 0);
    }
    return false;
  }

  const Coloring& coloring() const { return f_; }

 private:
  const std::vector<Matroid>& ns_;
  const ListAssignment& lists_;
  std::vector<Subset> classes_;
  Coloring f_;
};

// Local masks over the support: bit i stands for the i-th support element.
struct SupportTable {
  explicit SupportTable(const Matroid& m) : elems(m.support().elements()) {
    const std::size_t count = std::size_t{1} << elems.size();
    indep.resize(count);
    for (std::size_t x = 0; x < count; ++x) indep[x] = m.is_independent(global(x));
  }
  Subset global(std::size_t local) const {
    Subset s;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (local >> i & 1) s.insert(elems[i]);
    }
    return s;
  }
  std::vector<int> elems;
  std::vector<char> indep;
};

}  // namespace

std::optional<Coloring> coop_colorable_bf(const std::vector<Matroid>& ns,
                                          const ListAssignment& lists) {
  if (static_cast<int>(ns.size()) != lists.palette()) {
    throw Error("expected one matroid per color");
  }
  std::uint64_t total = 1;
  for (int e = 0; e < lists.size(); ++e) {
    total *= static_cast<std::uint64_t>(lists.palette());
    if (total > kMaxColorings) {
      throw TooLarge("t^|E| exceeds " + std::to_string(kMaxColorings));
    }
  }
  ColoringSearch search(ns, lists);
  if (search.run(0)) return search.coloring();
  return std::nullopt;
}

std::uint64_t count_independent_sets(const Matroid& m) {
  if (m.support().size() > kMaxCountSize) {
    throw TooLarge("counting needs |E| <= " + std::to_string(kMaxCountSize));
  }
  std::uint64_t count = 0;
  for_each_subset(m.support(), [&](Subset s) {
    if (m.is_independent(s)) ++count;
  });
  return count;
}

std::vector<Subset> list_independent_sets(const Matroid& m) {
  if (m.support().size() > kMaxListSize) {
    throw TooLarge("listing needs |E| <= " + std::to_string(kMaxListSize));
  }
  std::vector<Subset> out;
  for_each_subset(m.support(), [&](Subset s) {
    if (m.is_independent(s)) out.push_back(s);
  });
  return out;
}

int max_independent_size(const Matroid& m, Subset s) {
  int best = 0;
  for_each_subset(s, [&](Subset i) {
    if (i.size() > best && m.is_independent(i)) best = i.size();
  });
  return best;
}

std::optional<Subset> k_colorability_violation(const Matroid& m, int k) {
  if (m.support().size() > kMaxCountSize) {
    throw TooLarge("exhaustive check needs |E| <= " +
                   std::to_string(kMaxCountSize));
  }
  const SupportTable table(m);
  const std::size_t count = table.indep.size();
  const int u = static_cast<int>(table.elems.size());
  std::vector<int> r(count);
  for (std::size_t x = 0; x < count; ++x) {
    if (table.indep[x]) {
      r[x] = std::popcount(x);
      continue;
    }
    for (int i = 0; i < u; ++i) {
      if (x >> i & 1) r[x] = std::max(r[x], r[x & ~(std::size_t{1} << i)]);
    }
  }
  for (std::size_t x = 0; x < count; ++x) {
    if (k * r[x] < std::popcount(x)) return table.global(x);
  }
  return std::nullopt;
}

}  // namespace coopmat::bf
