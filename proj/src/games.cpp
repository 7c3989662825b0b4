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

#include "coopmat/games.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "coopmat/coloring.hpp"
#include "coopmat/errors.hpp"

namespace coopmat {

std::string to_string(Player p) { return p == Player::kAnn ? "ann" : "ben"; }

std::string to_string(PaintingRules rules) {
  return rules == PaintingRules::kNoDeadElement ? "no-dead-element"
                                                : "strict-all-colored";
}

namespace {

int common_ground(const std::vector<Matroid>& ms) {
  if (ms.empty()) return 0;
  const int n = ms.front().ground_size();
  for (const Matroid& m : ms) {
    if (m.ground_size() != n) {
      throw Error("all matroids of a game must share one ground set");
    }
  }
  return n;
}

void guard(int n, int t, int max_n, int max_t, const char* game) {
  if (n > max_n || t > max_t) {
    throw StateSpaceTooLarge(std::string(game) + " game needs |E| <= " +
                             std::to_string(max_n) + " and t <= " +
                             std::to_string(max_t));
  }
}

Subset colored_set(const std::vector<Subset>& classes) {
  Subset all;
  for (Subset c : classes) all |= c;
  return all;
}

std::uint64_t pack_classes(const std::vector<Subset>& classes, int n) {
  std::uint64_t key = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    key |= classes[c].mask() << (c * n);
  }
  return key;
}

}  // namespace

// ---- indicated -----------------------------------------------------------

IndicatedGame::IndicatedGame(std::vector<Matroid> ms)
    : ms_(std::move(ms)), n_(common_ground(ms_)) {
  guard(n_, static_cast<int>(ms_.size()), kMaxIndicatedElements,
        kMaxIndicatedColors, "indicated");
}

IndicatedGame::State IndicatedGame::initial() const {
  return State{std::vector<Subset>(ms_.size()), -1};
}

std::uint64_t IndicatedGame::key(const State& s) const {
  const auto offset = static_cast<int>(ms_.size()) * n_;
  return pack_classes(s.classes, n_) |
         static_cast<std::uint64_t>(s.pointed + 1) << offset;
}

Player IndicatedGame::mover(const State& s) const {
  return s.pointed < 0 ? Player::kAnn : Player::kBen;
}

std::optional<Player> IndicatedGame::winner(const State& s) const {
  if (s.pointed < 0) {
    if (colored_set(s.classes) == Subset::full(n_)) return Player::kAnn;
    return std::nullopt;
  }
  for (std::size_t c = 0; c < ms_.size(); ++c) {
    if (ms_[c].can_add(s.classes[c], s.pointed)) return std::nullopt;
  }
  return Player::kBen;
}

std::vector<GameMove> IndicatedGame::moves(const State& s) const {
  std::vector<GameMove> out;
  if (s.pointed < 0) {
    for (int e : colored_set(s.classes).complement(n_)) {
      out.push_back(GameMove{e, 0, {}});
    }
  } else {
    for (std::size_t c = 0; c < ms_.size(); ++c) {
      if (ms_[c].can_add(s.classes[c], s.pointed)) {
        out.push_back(GameMove{-1, static_cast<int>(c) + 1, {}});
      }
    }
  }
  return out;
}

IndicatedGame::State IndicatedGame::play(const State& s,
                                         const GameMove& m) const {
  State next = s;
  if (s.pointed < 0) {
    next.pointed = m.element;
  } else {
    next.classes[m.color - 1].insert(s.pointed);
    next.pointed = -1;
  }
  return next;
}

// ---- marking -------------------------------------------------------------

MarkingGame::MarkingGame(std::vector<Matroid> ms, Player first)
    : ms_(std::move(ms)), n_(common_ground(ms_)), first_(first) {
  guard(n_, static_cast<int>(ms_.size()), kMaxIndicatedElements,
        kMaxIndicatedColors, "marking");
}

MarkingGame::State MarkingGame::initial() const {
  return State{std::vector<Subset>(ms_.size()), first_};
}

std::uint64_t MarkingGame::key(const State& s) const {
  const auto offset = static_cast<int>(ms_.size()) * n_;
  return pack_classes(s.classes, n_) |
         static_cast<std::uint64_t>(s.to_move == Player::kBen) << offset;
}

std::optional<Player> MarkingGame::winner(const State& s) const {
  const Subset uncolored = colored_set(s.classes).complement(n_);
  if (uncolored.empty()) return Player::kAnn;
  for (int e : uncolored) {
    bool legal = false;
    for (std::size_t c = 0; c < ms_.size() && !legal; ++c) {
      legal = ms_[c].can_add(s.classes[c], e);
    }
    if (!legal) return Player::kBen;
  }
  return std::nullopt;
}

std::vector<GameMove> MarkingGame::moves(const State& s) const {
  std::vector<GameMove> out;
  for (int e : colored_set(s.classes).complement(n_)) {
    for (std::size_t c = 0; c < ms_.size(); ++c) {
      if (ms_[c].can_add(s.classes[c], e)) {
        out.push_back(GameMove{e, static_cast<int>(c) + 1, {}});
      }
    }
  }
  return out;
}

MarkingGame::State MarkingGame::play(const State& s, const GameMove& m) const {
  State next = s;
  next.classes[m.color - 1].insert(m.element);
  next.to_move = s.to_move == Player::kAnn ? Player::kBen : Player::kAnn;
  return next;
}

// ---- painting ------------------------------------------------------------

PaintingGame::PaintingGame(std::vector<Matroid> ms, int k, PaintingRules rules)
    : ms_(std::move(ms)), n_(common_ground(ms_)), k_(k), rules_(rules) {
  guard(n_, static_cast<int>(ms_.size()), kMaxPaintingElements,
        kMaxPaintingColors, "painting");
  if (k_ < 1 || k_ > kMaxPaintingMarks) {
    throw StateSpaceTooLarge("painting game needs 1 <= k <= " +
                             std::to_string(kMaxPaintingMarks));
  }
}

PaintingGame::State PaintingGame::initial() const {
  return State{std::vector<Subset>(ms_.size()), std::vector<int>(n_, 0), 0,
               false, {}};
}

std::uint64_t PaintingGame::key(const State& s) const {
  // classes | marks (3 bits each) | offered | round | phase
  int offset = static_cast<int>(ms_.size()) * n_;
  std::uint64_t key = pack_classes(s.classes, n_);
  for (int e = 0; e < n_; ++e) {
    key |= static_cast<std::uint64_t>(s.marks[e]) << offset;
    offset += 3;
  }
  key |= s.offered.mask() << offset;
  offset += n_;
  key |= static_cast<std::uint64_t>(s.round) << offset;
  offset += 3;
  key |= static_cast<std::uint64_t>(s.ann_phase) << offset;
  return key;
}

std::optional<Player> PaintingGame::winner(const State& s) const {
  if (s.ann_phase) return std::nullopt;
  const Subset uncolored = colored_set(s.classes).complement(n_);
  if (uncolored.empty()) return Player::kAnn;
  // An exhausted uncolored element can never be colored again; under the
  // no-dead-element rule that is the losing condition itself.
  for (int e : uncolored) {
    if (s.marks[e] >= k_) return Player::kBen;
  }
  if (s.round == static_cast<int>(ms_.size())) {
    return rules_ == PaintingRules::kNoDeadElement ? Player::kAnn
                                                   : Player::kBen;
  }
  return std::nullopt;
}

std::vector<GameMove> PaintingGame::moves(const State& s) const {
  std::vector<GameMove> out;
  if (!s.ann_phase) {
    Subset eligible;
    for (int e : colored_set(s.classes).complement(n_)) {
      if (s.marks[e] < k_) eligible.insert(e);
    }
    for_each_subset(eligible, [&](Subset b) { out.push_back({-1, 0, b}); });
  } else {
    const Matroid& m = ms_[s.round];
    for_each_subset(s.offered & m.support(), [&](Subset a) {
      if (m.is_independent(a)) out.push_back({-1, s.round + 1, a});
    });
  }
  return out;
}

PaintingGame::State PaintingGame::play(const State& s,
                                       const GameMove& m) const {
  State next = s;
  if (!s.ann_phase) {
    for (int e : m.set) ++next.marks[e];
    next.offered = m.set;
    next.ann_phase = true;
  } else {
    next.classes[s.round] = m.set;
    next.offered = Subset{};
    next.ann_phase = false;
    ++next.round;
  }
  return next;
}

// ---- entry points --------------------------------------------------------

GameOutcome solve_indicated(const std::vector<Matroid>& ms) {
  return solve_game(IndicatedGame(ms));
}

GameOutcome solve_marking(const std::vector<Matroid>& ms, Player first) {
  return solve_game(MarkingGame(ms, first));
}

GameOutcome solve_painting(const std::vector<Matroid>& ms, int k,
                           PaintingRules rules) {
  return solve_game(PaintingGame(ms, k, rules));
}

std::vector<Subset> two_covering(const std::vector<Matroid>& ms) {
  if (ms.size() % 2 != 0) {
    throw Error("a 2-covering needs an even number of matroids");
  }
  const std::size_t k = ms.size() / 2;
  std::vector<Subset> parts;
  for (std::size_t half = 0; half < 2; ++half) {
    std::vector<Matroid> group(ms.begin() + half * k,
                               ms.begin() + (half + 1) * k);
    const Coloring f = cooperative_color(group, PreconditionCheck::kAlways);
    for (std::size_t c = 1; c <= k; ++c) {
      parts.push_back(f.color_class(static_cast<int>(c)));
    }
  }
  return parts;
}

namespace {

struct PlannedInstance {
  std::size_t family;
  std::vector<std::size_t> members;
  int k;
};

void ordered_tuples(const std::vector<std::size_t>& group, int k,
                    std::vector<std::size_t>& prefix,
                    std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t idx : group) {
    prefix.push_back(idx);
    ordered_tuples(group, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

ConjectureReport painting_conjecture_search(
    const std::vector<ConjectureFamily>& catalog, PaintingRules rules,
    int workers) {
  std::vector<std::vector<Matroid>> built(catalog.size());
  std::vector<PlannedInstance> plan;
  for (std::size_t f = 0; f < catalog.size(); ++f) {
    const ConjectureFamily& fam = catalog[f];
    std::map<int, std::vector<std::size_t>> by_size;
    for (std::size_t i = 0; i < fam.pool.size(); ++i) {
      built[f].push_back(build_matroid(fam.pool[i]));
      if (chromatic_number(built[f].back()) <= fam.k) {
        by_size[built[f].back().ground_size()].push_back(i);
      }
    }
    for (const auto& [size, group] : by_size) {
      std::vector<std::vector<std::size_t>> tuples;
      if (fam.single_matroid_only) {
        for (std::size_t idx : group) {
          tuples.emplace_back(static_cast<std::size_t>(fam.k), idx);
        }
      } else {
        std::vector<std::size_t> prefix;
        ordered_tuples(group, fam.k, prefix, tuples);
      }
      for (auto& members : tuples) plan.push_back({f, std::move(members), fam.k});
    }
  }

  std::vector<ConjectureRecord> records(plan.size());
  auto run_one = [&](std::size_t i) {
    const PlannedInstance& p = plan[i];
    ConjectureRecord rec;
    rec.index = i;
    rec.family = p.family;
    rec.members = p.members;
    rec.k = p.k;
    rec.single_matroid =
        std::all_of(p.members.begin(), p.members.end(),
                    [&](std::size_t m) { return m == p.members.front(); });
    std::vector<Matroid> ms;
    for (std::size_t m : p.members) ms.push_back(built[p.family][m]);
    try {
      PaintingGame game(ms, p.k, rules);
      GameOutcome out = solve_game(game);
      rec.winner = out.winner;
      rec.explored_states = out.explored_states;
      if (out.winner == Player::kBen) rec.transcript = principal_line(game, out);
    } catch (const StateSpaceTooLarge& e) {
      rec.skipped = true;
      rec.skip_reason = e.what();
    }
    records[i] = std::move(rec);
  };

  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < plan.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < plan.size(); i = next++) run_one(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  ConjectureReport report;
  for (ConjectureRecord& rec : records) {
    if (rec.skipped) {
      ++report.skipped;
    } else {
      ++report.solved;
      if (rec.winner == Player::kAnn) {
        ++report.ann_wins;
      } else {
        ++report.ben_wins;
        if (rec.single_matroid) ++report.base_case_violations;
      }
    }
  }
  report.records = std::move(records);
  return report;
}

}  // namespace coopmat
