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

#include "coopmat/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "coopmat/errors.hpp"

namespace coopmat {

namespace detail {

class MatroidImpl {
 public:
  MatroidImpl(int n, MatroidKind kind, Subset support)
      : n_(n), kind_(kind), support_(support) {}
  virtual ~MatroidImpl() = default;

  virtual bool independent(Subset s) const = 0;

  int n_;
  MatroidKind kind_;
  Subset support_;
  std::optional<MatroidSpec> spec_;
};

}  // namespace detail

namespace {

using detail::MatroidImpl;

class UniformImpl final : public MatroidImpl {
 public:
  UniformImpl(int n, int r)
      : MatroidImpl(n, MatroidKind::kUniform, Subset::full(n)), rank_(r) {}
  bool independent(Subset s) const override { return s.size() <= rank_; }

 private:
  int rank_;
};

// Acyclicity by union-find over the endpoints of the selected edges.
class GraphicImpl final : public MatroidImpl {
 public:
  GraphicImpl(int vertices, std::vector<std::pair<int, int>> edges)
      : MatroidImpl(static_cast<int>(edges.size()), MatroidKind::kGraphic,
                    Subset::full(static_cast<int>(edges.size()))),
        vertices_(vertices),
        edges_(std::move(edges)) {}

  bool independent(Subset s) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e : s) {
      int a = find(edges_[e].first);
      int b = find(edges_[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

class PartitionImpl final : public MatroidImpl {
 public:
  PartitionImpl(int n, std::vector<Subset> blocks, std::vector<int> capacities)
      : MatroidImpl(n, MatroidKind::kPartition, Subset::full(n)),
        blocks_(std::move(blocks)),
        capacities_(std::move(capacities)) {}

  bool independent(Subset s) const override {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if ((s & blocks_[b]).size() > capacities_[b]) return false;
    }
    return true;
  }

 private:
  std::vector<Subset> blocks_;
  std::vector<int> capacities_;
};

// Column rank over GF(p) by Gaussian elimination on the selected columns.
class LinearImpl final : public MatroidImpl {
 public:
  LinearImpl(int prime, std::vector<std::vector<int>> columns, int rows)
      : MatroidImpl(static_cast<int>(columns.size()), MatroidKind::kLinear,
                    Subset::full(static_cast<int>(columns.size()))),
        prime_(prime),
        rows_(rows),
        columns_(std::move(columns)) {}

  bool independent(Subset s) const override {
    const int cols = s.size();
    if (cols > rows_) return false;
    // Row-major copy of the selected columns.
    std::vector<int> a(static_cast<std::size_t>(rows_) * cols);
    int c = 0;
    for (int e : s) {
      for (int r = 0; r < rows_; ++r) a[r * cols + c] = columns_[e][r];
      ++c;
    }
    int pivot_row = 0;
    for (c = 0; c < cols; ++c) {
      int found = -1;
      for (int r = pivot_row; r < rows_; ++r) {
        if (a[r * cols + c] != 0) {
          found = r;
          break;
        }
      }
      if (found < 0) return false;
      if (found != pivot_row) {
        for (int j = 0; j < cols; ++j) {
          std::swap(a[found * cols + j], a[pivot_row * cols + j]);
        }
      }
      const int inv = inverse(a[pivot_row * cols + c]);
      for (int r = pivot_row + 1; r < rows_; ++r) {
        const int f = a[r * cols + c] * inv % prime_;
        if (f == 0) continue;
        for (int j = c; j < cols; ++j) {
          a[r * cols + j] =
              ((a[r * cols + j] - f * a[pivot_row * cols + j]) % prime_ +
               prime_) %
              prime_;
        }
      }
      ++pivot_row;
    }
    return true;
  }

 private:
  int inverse(int x) const {
    // Fermat: x^(p-2) mod p.
    int result = 1;
    int base = x;
    for (int e = prime_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % prime_;
      base = base * base % prime_;
    }
    return result;
  }

  int prime_;
  int rows_;
  std::vector<std::vector<int>> columns_;
};

class RestrictionImpl final : public MatroidImpl {
 public:
  RestrictionImpl(Matroid base, Subset x)
      : MatroidImpl(base.ground_size(), MatroidKind::kRestriction,
                    x & base.support()),
        base_(std::move(base)) {}

  bool independent(Subset s) const override {
    if (!s.is_subset_of(support_)) {
      throw OutOfRestriction("query " + s.to_string() +
                             " leaves the restriction " +
                             support_.to_string());
    }
    return base_.is_independent(s);
  }

 private:
  Matroid base_;
};

class PullbackImpl final : public MatroidImpl {
 public:
  PullbackImpl(Matroid base, Permutation pi)
      : MatroidImpl(base.ground_size(), MatroidKind::kPullback,
                    pi.inverse()(base.support())),
        base_(std::move(base)),
        pi_(std::move(pi)) {}

  bool independent(Subset s) const override {
    return base_.is_independent(pi_(s));
  }

 private:
  Matroid base_;
  Permutation pi_;
};

class PredicateImpl final : public MatroidImpl {
 public:
  PredicateImpl(int n, std::function<bool(Subset)> fn)
      : MatroidImpl(n, MatroidKind::kPredicate, Subset::full(n)),
        fn_(std::move(fn)) {}
  bool independent(Subset s) const override { return fn_(s); }

 private:
  std::function<bool(Subset)> fn_;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw MalformedSpec("ground size " + std::to_string(n) +
                        " outside 0.." + std::to_string(kMaxGroundSize));
  }
}

void check_loopless(const Matroid& m) {
  for (int e : m.support()) {
    if (!m.is_independent(Subset::singleton(e))) {
      throw LoopDetected("element " + std::to_string(e) + " is a loop");
    }
  }
}

struct SpecBuilder {
  std::shared_ptr<MatroidImpl> operator()(const UniformSpec& s) const {
    check_ground_size(s.n);
    if (s.rank < 0 || s.rank > s.n) {
      throw MalformedSpec("uniform rank " + std::to_string(s.rank) +
                          " outside 0.." + std::to_string(s.n));
    }
    return std::make_shared<UniformImpl>(s.n, s.rank);
  }

  std::shared_ptr<MatroidImpl> operator()(const GraphicSpec& s) const {
    if (s.vertices < 0) throw MalformedSpec("negative vertex count");
    check_ground_size(static_cast<int>(s.edges.size()));
    for (auto [u, v] : s.edges) {
      if (u < 0 || v < 0 || u >= s.vertices || v >= s.vertices) {
        throw MalformedSpec("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") references a missing vertex");
      }
    }
    return std::make_shared<GraphicImpl>(s.vertices, s.edges);
  }

  std::shared_ptr<MatroidImpl> operator()(const PartitionSpec& s) const {
    check_ground_size(s.n);
    if (s.blocks.size() != s.capacities.size()) {
      throw MalformedSpec("partition needs one capacity per block");
    }
    std::vector<Subset> blocks;
    Subset seen;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      Subset block;
      for (int e : s.blocks[b]) {
        if (e < 0 || e >= s.n) {
          throw MalformedSpec("partition element " + std::to_string(e) +
                              " outside the ground set");
        }
        if (seen.contains(e)) {
          throw MalformedSpec("partition element " + std::to_string(e) +
                              " appears in two blocks");
        }
        seen.insert(e);
        block.insert(e);
      }
      if (s.capacities[b] < 0) throw MalformedSpec("negative capacity");
      blocks.push_back(block);
    }
    if (seen != Subset::full(s.n)) {
      throw MalformedSpec("partition blocks do not cover the ground set");
    }
    return std::make_shared<PartitionImpl>(s.n, std::move(blocks),
                                           s.capacities);
  }

  std::shared_ptr<MatroidImpl> operator()(const LinearSpec& s) const {
    if (!is_prime(s.prime) || s.prime > 251) {
      throw MalformedSpec("field size " + std::to_string(s.prime) +
                          " is not a prime <= 251");
    }
    check_ground_size(static_cast<int>(s.columns.size()));
    std::size_t rows = 0;
    for (const auto& c : s.columns) rows = std::max(rows, c.size());
    std::vector<std::vector<int>> reduced;
    for (const auto& c : s.columns) {
      std::vector<int> col(rows, 0);
      for (std::size_t r = 0; r < c.size(); ++r) {
        col[r] = ((c[r] % s.prime) + s.prime) % s.prime;
      }
      reduced.push_back(std::move(col));
    }
    return std::make_shared<LinearImpl>(s.prime, std::move(reduced),
                                        static_cast<int>(rows));
  }

  std::shared_ptr<MatroidImpl> operator()(const RestrictionSpec& s) const {
    if (!s.base) throw MalformedSpec("restriction without a base");
    Matroid base = build_matroid(*s.base);
    Subset x;
    for (int e : s.subset) {
      if (e < 0 || e >= base.ground_size()) {
        throw MalformedSpec("restriction element " + std::to_string(e) +
                            " outside the ground set");
      }
      x.insert(e);
    }
    return std::make_shared<RestrictionImpl>(std::move(base), x);
  }

  std::shared_ptr<MatroidImpl> operator()(const PullbackSpec& s) const {
    if (!s.base) throw MalformedSpec("pullback without a base");
    Matroid base = build_matroid(*s.base);
    Permutation pi(s.permutation);
    if (pi.size() != base.ground_size()) {
      throw MalformedSpec("permutation size does not match the ground set");
    }
    return std::make_shared<PullbackImpl>(std::move(base), std::move(pi));
  }
};

}  // namespace

std::string to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kGraphic: return "graphic";
    case MatroidKind::kPartition: return "partition";
    case MatroidKind::kLinear: return "linear";
    case MatroidKind::kRestriction: return "restriction";
    case MatroidKind::kPullback: return "pullback";
    case MatroidKind::kPredicate: return "predicate";
  }
  return "unknown";
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || hit[v]) {
      throw MalformedSpec("permutation is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Subset Permutation::operator()(Subset s) const {
  Subset out;
  for (int e : s) out.insert(image_[e]);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int e = 0; e < size(); ++e) inv[image_[e]] = e;
  return Permutation(std::move(inv));
}

Matroid Matroid::from_predicate(int n, std::function<bool(Subset)> independent) {
  check_ground_size(n);
  return Matroid(std::make_shared<PredicateImpl>(n, std::move(independent)));
}

int Matroid::ground_size() const { return impl_->n_; }
Subset Matroid::support() const { return impl_->support_; }
MatroidKind Matroid::kind() const { return impl_->kind_; }
const std::optional<MatroidSpec>& Matroid::spec() const { return impl_->spec_; }

bool Matroid::is_independent(Subset s) const { return impl_->independent(s); }

bool Matroid::can_add(Subset s, int e) const {
  return impl_->support_.contains(e) && impl_->independent(s.with(e));
}

Matroid build_matroid(const MatroidSpec& spec) {
  std::shared_ptr<MatroidImpl> impl = std::visit(SpecBuilder{}, spec.value);
  impl->spec_ = spec;
  Matroid m(std::move(impl));
  check_loopless(m);
  return m;
}

int spec_ground_size(const MatroidSpec& spec) {
  struct Visitor {
    int operator()(const UniformSpec& s) const { return s.n; }
    int operator()(const GraphicSpec& s) const {
      return static_cast<int>(s.edges.size());
    }
    int operator()(const PartitionSpec& s) const { return s.n; }
    int operator()(const LinearSpec& s) const {
      return static_cast<int>(s.columns.size());
    }
    int operator()(const RestrictionSpec& s) const {
      return s.base ? spec_ground_size(*s.base) : 0;
    }
    int operator()(const PullbackSpec& s) const {
      return s.base ? spec_ground_size(*s.base) : 0;
    }
  };
  return std::visit(Visitor{}, spec.value);
}

int rank(const Matroid& m, Subset s) {
  Subset basis;
  for (int e : s) {
    if (m.is_independent(basis.with(e))) basis.insert(e);
  }
  return basis.size();
}

std::optional<Subset> fundamental_circuit(const Matroid& m, Subset a, int e) {
  if (!m.is_independent(a)) {
    throw NotIndependent("set " + a.to_string() + " is dependent");
  }
  if (a.contains(e)) {
    throw Error("element " + std::to_string(e) + " already in the set");
  }
  const Subset closed = a.with(e);
  if (m.is_independent(closed)) return std::nullopt;
  Subset circuit = Subset::singleton(e);
  for (int x : a) {
    if (m.is_independent(closed.without(x))) circuit.insert(x);
  }
  return circuit;
}

Matroid restrict(const Matroid& m, Subset x) {
  if (!x.is_subset_of(m.ground())) {
    throw MalformedSpec("restriction set leaves the ground set");
  }
  auto impl = std::make_shared<RestrictionImpl>(m, x);
  if (m.spec()) {
    impl->spec_ = MatroidSpec{RestrictionSpec{
        std::make_shared<const MatroidSpec>(*m.spec()), x.elements()}};
  }
  return Matroid(std::move(impl));
}

Matroid pullback(const Matroid& m, const Permutation& pi) {
  if (pi.size() != m.ground_size()) {
    throw MalformedSpec("permutation size does not match the ground set");
  }
  auto impl = std::make_shared<PullbackImpl>(m, pi);
  if (m.spec()) {
    impl->spec_ = MatroidSpec{PullbackSpec{
        std::make_shared<const MatroidSpec>(*m.spec()), pi.image()}};
  }
  return Matroid(std::move(impl));
}

std::string AxiomReport::describe() const {
  switch (violation) {
    case Violation::kNone: return "ok";
    case Violation::kEmptyDependent: return "empty set is dependent";
    case Violation::kLoop:
      return "element " + std::to_string(element) + " is a loop";
    case Violation::kHeredity:
      return "heredity: " + smaller.to_string() + " is dependent but " +
             larger.to_string() + " is independent";
    case Violation::kExchange:
      return "exchange: no element of " + larger.to_string() + " extends " +
             smaller.to_string();
  }
  return "unknown";
}

AxiomReport verify_matroid_axioms(const Matroid& m) {
  const std::vector<int> elems = m.support().elements();
  const int u = static_cast<int>(elems.size());
  if (u > kMaxAxiomCheckSize) {
    throw TooLarge("axiom check needs |support| <= " +
                   std::to_string(kMaxAxiomCheckSize));
  }
  // Work on local masks; local order matches global id order.
  const std::size_t count = std::size_t{1} << u;
  auto global = [&](std::size_t local) {
    Subset s;
    for (int i = 0; i < u; ++i) {
      if (local >> i & 1) s.insert(elems[i]);
    }
    return s;
  };
  std::vector<char> indep(count);
  for (std::size_t x = 0; x < count; ++x) indep[x] = m.is_independent(global(x));

  AxiomReport report;
  if (!indep[0]) {
    report.violation = AxiomReport::Violation::kEmptyDependent;
    return report;
  }
  for (int i = 0; i < u; ++i) {
    if (!indep[std::size_t{1} << i]) {
      report.violation = AxiomReport::Violation::kLoop;
      report.element = elems[i];
      return report;
    }
  }
  for (std::size_t x = 0; x < count; ++x) {
    if (!indep[x]) continue;
    // Highest element first so the reported subset has the least mask.
    for (int i = u - 1; i >= 0; --i) {
      if ((x >> i & 1) && !indep[x & ~(std::size_t{1} << i)]) {
        report.violation = AxiomReport::Violation::kHeredity;
        report.smaller = global(x & ~(std::size_t{1} << i));
        report.larger = global(x);
        return report;
      }
    }
  }
  // With heredity in place, exchange reduces to: for independent S, the
  // elements that cannot extend S (plus S) must have rank |S|.
  std::vector<int> max_indep(count);
  for (std::size_t x = 0; x < count; ++x) {
    if (indep[x]) {
      max_indep[x] = std::popcount(x);
      continue;
    }
    int best = 0;
    for (int i = 0; i < u; ++i) {
      if (x >> i & 1) best = std::max(best, max_indep[x & ~(std::size_t{1} << i)]);
    }
    max_indep[x] = best;
  }
  for (std::size_t s = 0; s < count; ++s) {
    if (!indep[s]) continue;
    std::size_t dead = s;
    for (int i = 0; i < u; ++i) {
      const std::size_t b = std::size_t{1} << i;
      if (!(s & b) && !indep[s | b]) dead |= b;
    }
    const int target = std::popcount(s) + 1;
    if (max_indep[dead] < target) continue;
    report.violation = AxiomReport::Violation::kExchange;
    report.smaller = global(s);
    for (std::size_t t = 0; t < count; ++t) {
      if ((t & ~dead) == 0 && indep[t] && std::popcount(t) == target) {
        report.larger = global(t);
        break;
      }
    }
    return report;
  }
  return report;
}

}  // namespace coopmat
