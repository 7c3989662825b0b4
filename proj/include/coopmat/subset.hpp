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

#ifndef COOPMAT_SUBSET_HPP_
#define COOPMAT_SUBSET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coopmat {

/// Largest ground set the bitmask representation supports.
inline constexpr int kMaxGroundSize = 64;

/// A subset of a ground set {0, ..., n-1}, stored as a 64-bit mask.
///
/// The subset does not know its ground size; operations that need one
/// (complement, validation) take it explicitly.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }
  /// {0, ..., n-1}.
  static constexpr Subset full(int n) {
    assert(n >= 0 && n <= kMaxGroundSize);
    return Subset(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(int e) { return Subset(bit(e)); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int e) const { return (mask_ & bit(e)) != 0; }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(mask_); }
  /// One past the largest element (0 for the empty set).
  constexpr int span() const { return 64 - std::countl_zero(mask_); }

  constexpr void insert(int e) { mask_ |= bit(e); }
  constexpr void erase(int e) { mask_ &= ~bit(e); }

  constexpr Subset with(int e) const { return Subset(mask_ | bit(e)); }
  constexpr Subset without(int e) const { return Subset(mask_ & ~bit(e)); }
  constexpr Subset complement(int n) const {
    return Subset(~mask_ & full(n).mask_);
  }

  constexpr Subset operator|(Subset o) const { return Subset(mask_ | o.mask_); }
  constexpr Subset operator&(Subset o) const { return Subset(mask_ & o.mask_); }
  constexpr Subset operator-(Subset o) const { return Subset(mask_ & ~o.mask_); }
  constexpr Subset& operator|=(Subset o) { mask_ |= o.mask_; return *this; }
  constexpr Subset& operator&=(Subset o) { mask_ &= o.mask_; return *this; }
  constexpr Subset& operator-=(Subset o) { mask_ &= ~o.mask_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Forward iterator over elements in ascending id order.
  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }
  /// "{0,3,5}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr std::uint64_t bit(int e) {
    assert(e >= 0 && e < kMaxGroundSize);
    return std::uint64_t{1} << e;
  }

  std::uint64_t mask_ = 0;
};

/// Calls fn(Subset) for every subset of `of`, in ascending mask order.
template <class Fn>
void for_each_subset(Subset of, Fn&& fn) {
  // Enumerates submasks upward: next = (cur - of) & of.
  const std::uint64_t m = of.mask();
  std::uint64_t cur = 0;
  while (true) {
    fn(Subset(cur));
    if (cur == m) break;
    cur = (cur - m) & m;
  }
}

}  // namespace coopmat

#endif  // COOPMAT_SUBSET_HPP_
