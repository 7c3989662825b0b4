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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or overruns its time limit.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "coopmat/brute_force.hpp"
#include "coopmat/coloring.hpp"
#include "coopmat/corpus.hpp"
#include "coopmat/errors.hpp"
#include "coopmat/games.hpp"
#include "coopmat/matroid.hpp"
#include "coopmat/partition.hpp"

namespace coopmat {
namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Corpus matroids, built once, grouped by ground size.
struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<Matroid> matroids;
  std::vector<int> chi;

  Corpus() : entries(builtin_corpus()) {
    for (const auto& e : entries) {
      matroids.push_back(build_matroid(e.spec));
      chi.push_back(chromatic_number(matroids.back()));
    }
  }

  std::map<int, std::vector<int>> by_size(int max_n, int max_chi) const {
    std::map<int, std::vector<int>> out;
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      const int n = matroids[i].ground_size();
      if (n <= max_n && chi[i] <= max_chi) out[n].push_back(static_cast<int>(i));
    }
    return out;
  }
};

// Union-find acyclicity check kept local to this binary.
bool acyclic_uf(const GraphicSpec& g, Subset s) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int e : s) {
    const int a = find(g.edges[e].first);
    const int b = find(g.edges[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Every ordered t-tuple over `pool`.
void for_each_tuple(const std::vector<int>& pool, int t,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (pool.empty()) return;
  std::vector<std::size_t> idx(t, 0);
  std::vector<int> tuple(t);
  while (true) {
    for (int i = 0; i < t; ++i) tuple[i] = pool[idx[i]];
    fn(tuple);
    int i = t - 1;
    while (i >= 0 && ++idx[i] == pool.size()) idx[i--] = 0;
    if (i < 0) return;
  }
}

std::vector<std::vector<int>> k_subsets(int t, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << t); ++m) {
    if (std::popcount(m) != k) continue;
    std::vector<int> s;
    for (int c = 0; c < t; ++c) {
      if (m >> c & 1) s.push_back(c + 1);
    }
    out.push_back(s);
  }
  return out;
}

ListAssignment random_lists(std::mt19937_64& rng, int n, int t, int k) {
  std::vector<std::vector<int>> lists(n);
  for (auto& l : lists) {
    std::vector<int> colors(t);
    std::iota(colors.begin(), colors.end(), 1);
    for (int i = 0; i < k; ++i) {
      std::swap(colors[i], colors[i + rng() % (t - i)]);
      l.push_back(colors[i]);
    }
  }
  return ListAssignment(t, k, lists);
}

void fail(Verdict& v, const std::string& why) {
  if (v.ok) v.detail = why;
  v.ok = false;
}

std::vector<Matroid> pick(const Corpus& c, const std::vector<int>& ids) {
  std::vector<Matroid> out;
  for (int i : ids) out.push_back(c.matroids[i]);
  return out;
}

// 1. χ by partitioning equals the enumerated formula.
Verdict criterion1(const Corpus& c) {
  Verdict v;
  int count = 0;
  for (std::size_t i = 0; i < c.matroids.size(); ++i) {
    const int formula = chromatic_number_formula_bf(c.matroids[i]).value;
    if (c.chi[i] != formula) fail(v, c.entries[i].name + " mismatch");
    ++count;
  }
  if (count < 30) fail(v, "corpus has fewer than 30 matroids");
  if (v.ok) v.detail = std::to_string(count) + " matroids, exact match";
  return v;
}

// 2. Union rank by augmenting paths equals the formula minimum.
Verdict criterion2(const Corpus& c) {
  Verdict v;
  std::mt19937_64 rng(2);
  const auto groups = c.by_size(10, 64);
  std::vector<int> sizes;
  for (const auto& [n, ids] : groups) sizes.push_back(n);
  int pairs = 0;
  for (; pairs < 400; ++pairs) {
    const int n = sizes[rng() % sizes.size()];
    const auto& ids = groups.at(n);
    const int t = 1 + static_cast<int>(rng() % 4);
    MatroidSystem sys;
    for (int i = 0; i < t; ++i) {
      const Subset adm = rng() % 2 ? Subset::full(n) : Subset(rng()) & Subset::full(n);
      sys.push_back({c.matroids[ids[rng() % ids.size()]], adm});
    }
    const Subset a = rng() % 4 ? Subset(rng()) & Subset::full(n) : Subset::full(n);
    if (union_rank(sys, a) != union_rank_formula_bf(sys, a).value) {
      fail(v, "mismatch at pair " + std::to_string(pairs));
    }
  }
  if (v.ok) v.detail = std::to_string(pairs) + " (system, A) pairs, exact match";
  return v;
}

// 3. is_k_colorable agrees with the exhaustive subset criterion.
Verdict criterion3(const Corpus& c) {
  Verdict v;
  int checks = 0;
  int yes = 0;
  for (std::size_t i = 0; i < c.matroids.size(); ++i) {
    const Matroid& m = c.matroids[i];
    if (m.ground_size() > 12) continue;
    for (int k = 1; k <= 3; ++k) {
      ++checks;
      const auto verdict = is_k_colorable(m, k);
      const bool crit = !bf::k_colorability_violation(m, k).has_value();
      if (const auto* f = std::get_if<Coloring>(&verdict)) {
        ++yes;
        if (!crit) fail(v, c.entries[i].name + ": yes but criterion fails");
        for (int col = 1; col <= k; ++col) {
          if (!m.is_independent(f->color_class(col))) fail(v, "dependent class");
        }
        if (!f->complete()) fail(v, "incomplete coloring");
      } else {
        const auto& cert = std::get<DeficiencyCertificate>(verdict);
        if (crit) fail(v, c.entries[i].name + ": no but criterion holds");
        if (k * bf::max_independent_size(m, cert.x) >= cert.x.size()) {
          fail(v, "unsound certificate");
        }
      }
    }
  }
  if (v.ok) {
    v.detail = std::to_string(checks) + " (matroid, k) checks, " + std::to_string(yes) +
               " yes / " + std::to_string(checks - yes) + " no, all agree";
  }
  return v;
}

// 4. coop_list_color on every ordered system with t <= 3, k <= t, |E| <= 6.
Verdict criterion4(const Corpus& c) {
  Verdict v;
  std::mt19937_64 rng(4);
  std::size_t systems = 0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int k = 1; k <= t; ++k) {
      for (const auto& [n, pool] : c.by_size(6, k)) {
        for_each_tuple(pool, t, [&](const std::vector<int>& ids) {
          ++systems;
          const std::vector<Matroid> ns = pick(c, ids);
          for (int trial = 0; trial < 1000; ++trial) {
            const ListAssignment l = random_lists(rng, n, t, k);
            ++runs;
            try {
              // χ <= k is established by the pool filter above.
              const Coloring f = coop_list_color(ns, l, PreconditionCheck::kNever);
              if (is_valid_list_coloring(ns, l, f)) {
                ++successes;
              } else {
                fail(v, "invalid output");
              }
            } catch (const PreconditionViolated&) {
              fail(v, "solver failed on a feasible instance");
            }
          }
        });
      }
    }
  }
  v.detail = std::to_string(systems) + " systems x 1000 lists, " + std::to_string(successes) +
             "/" + std::to_string(runs) + " valid" + (v.ok ? "" : "; " + v.detail);
  return v;
}

// 5. N_i = M for all i and k = χ(M): lists of size k from t = k and t = k + 1
// colors, exhaustive up to kExhaustive assignments, sampled beyond.
Verdict criterion5(const Corpus& c) {
  constexpr double kExhaustive = 20000;
  constexpr int kSamples = 2000;
  Verdict v;
  std::mt19937_64 rng(5);
  std::size_t runs = 0;
  std::size_t exhaustive = 0;
  std::size_t sampled = 0;
  auto check = [&](const std::vector<Matroid>& ns, const ListAssignment& l) {
    ++runs;
    try {
      if (!is_valid_list_coloring(ns, l, coop_list_color(ns, l, PreconditionCheck::kNever))) {
        fail(v, "invalid output");
      }
    } catch (const PreconditionViolated&) {
      fail(v, "solver failed");
    }
  };
  for (std::size_t i = 0; i < c.matroids.size(); ++i) {
    const Matroid& m = c.matroids[i];
    const int n = m.ground_size();
    const int k = c.chi[i];
    for (int t = k; t <= k + 1; ++t) {
      const std::vector<Matroid> ns(t, m);
      const auto options = k_subsets(t, k);
      const double total = std::pow(static_cast<double>(options.size()), n);
      if (total <= kExhaustive) {
        ++exhaustive;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          std::vector<std::vector<int>> lists(n);
          for (int e = 0; e < n; ++e) lists[e] = options[idx[e]];
          check(ns, ListAssignment(t, k, lists));
          int e = n - 1;
          while (e >= 0 && ++idx[e] == options.size()) idx[e--] = 0;
          if (e < 0) break;
        }
      } else {
        ++sampled;
        for (int s = 0; s < kSamples; ++s) check(ns, random_lists(rng, n, t, k));
      }
    }
  }
  v.detail = std::to_string(c.matroids.size()) + " matroids, " + std::to_string(exhaustive) +
             " exhaustive and " + std::to_string(sampled) + " sampled families, " +
             std::to_string(runs) + " runs" + (v.ok ? ", all valid" : "; " + v.detail);
  return v;
}

// 6. Forest plus permuted forest on K4.
Verdict criterion6() {
  Verdict v;
  std::mt19937_64 rng(6);
  const GraphicSpec g = k4_graph();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> image(6);
    std::iota(image.begin(), image.end(), 0);
    for (int i = 5; i > 0; --i) std::swap(image[i], image[rng() % (i + 1)]);
    const Permutation pi(image);
    const auto parts = forest_permutation_decomposition(g, {pi});
    const Subset f = parts[0];
    if (!acyclic_uf(g, f) || !acyclic_uf(g, pi(Subset::full(6) - f))) {
      fail(v, "permutation " + std::to_string(trial));
    }
  }
  if (v.ok) v.detail = "20 permutations, F and pi(E - F) acyclic";
  return v;
}

// 7. Indicated game on every system of k matroids with χ <= k, |E| <= 6.
Verdict criterion7(const Corpus& c) {
  Verdict v;
  std::size_t systems = 0;
  std::size_t ben = 0;
  for (int k = 1; k <= 2; ++k) {
    for (const auto& [n, pool] : c.by_size(6, k)) {
      for_each_tuple(pool, k, [&](const std::vector<int>& ids) {
        ++systems;
        if (solve_indicated(pick(c, ids)).winner == Player::kBen) {
          ++ben;
          fail(v, "Ben wins on a system of size " + std::to_string(n));
        }
      });
    }
  }
  v.detail = std::to_string(systems) + " systems, " + std::to_string(ben) + " Ben wins" +
             (v.ok ? "" : "; " + v.detail);
  return v;
}

// 8. two_covering and the marking game on every 2k-system with |E| <= 5,
// k <= 2.
Verdict criterion8(const Corpus& c) {
  Verdict v;
  std::size_t coverings = 0;
  std::size_t games = 0;
  std::size_t ben = 0;
  auto run = [&](const std::vector<Matroid>& ms) {
    const auto parts = two_covering(ms);
    ++coverings;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (!ms[i].is_independent(parts[i])) fail(v, "dependent covering part");
    }
    for (int e = 0; e < ms.front().ground_size(); ++e) {
      int hits = 0;
      for (const Subset& p : parts) hits += p.contains(e) ? 1 : 0;
      if (hits != 2) fail(v, "element covered " + std::to_string(hits) + " times");
    }
    ++games;
    if (solve_marking(ms).winner == Player::kBen) {
      ++ben;
      fail(v, "Ben wins a marking game");
    }
  };
  std::size_t exhaustive = 0;
  for (const auto& [n, pool] : c.by_size(5, 1)) {
    for_each_tuple(pool, 2, [&](const std::vector<int>& ids) {
      ++exhaustive;
      run(pick(c, ids));
    });
  }
  std::size_t doubled = 0;
  for (const auto& [n, pool] : c.by_size(5, 2)) {
    for_each_tuple(pool, 4, [&](const std::vector<int>& ids) {
      ++doubled;
      run(pick(c, ids));
    });
  }
  v.detail = std::to_string(exhaustive) + " k=1 and " + std::to_string(doubled) +
             " k=2 systems (all), " + std::to_string(coverings) + " exact 2-coverings, " +
             std::to_string(ben) + " Ben wins" + (v.ok ? "" : "; " + v.detail);
  v.ok = v.ok && coverings == games;
  return v;
}

// 9. Painting base case and the 2-matroid search, no-dead-element rules.
Verdict criterion9(const Corpus& c) {
  Verdict v;
  std::vector<ConjectureFamily> base;
  std::vector<ConjectureFamily> pairs;
  for (int k = 1; k <= 2; ++k) {
    for (const auto& [n, pool] : c.by_size(5, k)) {
      ConjectureFamily fam{k, {}, true};
      for (int id : pool) fam.pool.push_back(c.entries[id].spec);
      base.push_back(fam);
      if (k == 2) {
        fam.single_matroid_only = false;
        pairs.push_back(fam);
      }
    }
  }
  const int workers = std::max(1u, std::thread::hardware_concurrency());
  const auto b = painting_conjecture_search(base, PaintingRules::kNoDeadElement, workers);
  const auto p = painting_conjecture_search(pairs, PaintingRules::kNoDeadElement, workers);
  if (b.ben_wins != 0 || b.base_case_violations != 0) fail(v, "base case violated");
  if (b.skipped != 0 || p.skipped != 0) fail(v, "instances skipped");
  for (const auto& r : p.records) {
    if (!r.skipped && r.winner == Player::kBen && r.transcript.empty()) {
      fail(v, "counterexample without transcript");
    }
  }
  v.detail = std::to_string(b.solved) + " single-matroid systems all Ann; " +
             std::to_string(p.solved) + " two-matroid systems, " + std::to_string(p.ben_wins) +
             " counterexamples" + (v.ok ? "" : "; " + v.detail);
  return v;
}

// 10. Axioms on every constructor instance with |E| <= 10, plus the fixture.
Verdict criterion10(const Corpus& c) {
  Verdict v;
  std::mt19937_64 rng(10);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.matroids.size(); ++i) {
    const Matroid& m = c.matroids[i];
    const int n = m.ground_size();
    if (n > 10) continue;
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    for (int j = n - 1; j > 0; --j) std::swap(image[j], image[rng() % (j + 1)]);
    const Subset keep = Subset(rng()) & Subset::full(n);
    for (const Matroid& x : {m, restrict(m, keep), pullback(m, Permutation(image))}) {
      ++checked;
      const AxiomReport r = verify_matroid_axioms(x);
      if (!r.ok()) fail(v, c.entries[i].name + ": " + r.describe());
    }
  }
  const AxiomReport broken = verify_matroid_axioms(
      Matroid::from_predicate(3, [](Subset s) { return s.size() != 2; }));
  if (broken.violation != AxiomReport::Violation::kHeredity) {
    fail(v, "broken fixture not flagged as heredity violation");
  }
  if (v.ok) {
    v.detail = std::to_string(checked) + " instances pass; fixture fails heredity with " +
               broken.smaller.to_string() + " in " + broken.larger.to_string();
  }
  return v;
}

}  // namespace
}  // namespace coopmat

int main() {
  using namespace coopmat;
  using Clock = std::chrono::steady_clock;
  const Corpus corpus;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "chromatic number equals formula", 60, [&] { return criterion1(corpus); }},
      {2, "union rank equals formula", 60, [&] { return criterion2(corpus); }},
      {3, "k-colorability both directions", 120, [&] { return criterion3(corpus); }},
      {4, "list coloring solver", 300, [&] { return criterion4(corpus); }},
      {5, "list chromatic equals chromatic", 300, [&] { return criterion5(corpus); }},
      {6, "forest permutation decomposition", 1, [] { return criterion6(); }},
      {7, "indicated game", 600, [&] { return criterion7(corpus); }},
      {8, "two-covering and marking game", 600, [&] { return criterion8(corpus); }},
      {9, "painting base case and search", 1800, [&] { return criterion9(corpus); }},
      {10, "matroid axioms", 30, [&] { return criterion10(corpus); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = v.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %2d: %s  %-34s %8.3f s (limit %g s)%s  %s\n", c.id,
                pass ? "PASS" : "FAIL", c.name, secs, c.limit_s, in_time ? "" : " OVERRUN",
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
