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

#include <gtest/gtest.h>

#include <random>

#include "coopmat/coloring.hpp"
#include "coopmat/corpus.hpp"
#include "coopmat/errors.hpp"
#include "test_support.hpp"

namespace coopmat {
namespace {

using testing::k4;
using testing::u;

Matroid free_m(int n) { return build_matroid(free_spec(n)); }

template <class Game>
void expect_strategy_holds(const Game& game, const GameOutcome& outcome,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(replay_against_random(game, outcome, rng), outcome.winner);
  }
}

TEST(IndicatedGameTest, BasicCases) {
  const std::vector<Matroid> two{u(2, 1), u(2, 1)};
  const GameOutcome a = solve_indicated(two);
  EXPECT_EQ(a.winner, Player::kAnn);
  // Hand count: root, (a pointed), then per color of a: colored state,
  // b pointed, terminal. 1 + 1 + 2 * 3 = 8.
  EXPECT_EQ(a.explored_states, 8u);
  expect_strategy_holds(IndicatedGame(two), a, 1);

  EXPECT_EQ(solve_indicated({free_m(3)}).winner, Player::kAnn);
  const GameOutcome ben = solve_indicated({u(2, 1)});
  EXPECT_EQ(ben.winner, Player::kBen);
  expect_strategy_holds(IndicatedGame({u(2, 1)}), ben, 2);
}

TEST(IndicatedGameTest, Guards) {
  EXPECT_THROW(solve_indicated({free_m(9)}), StateSpaceTooLarge);
  const Matroid m = free_m(2);
  EXPECT_THROW(solve_indicated({m, m, m, m, m}), StateSpaceTooLarge);
}

TEST(MarkingGameTest, BasicCases) {
  for (Player first : {Player::kAnn, Player::kBen}) {
    EXPECT_EQ(solve_marking({free_m(2), free_m(2)}, first).winner, Player::kAnn);
  }
  const std::vector<Matroid> two{u(2, 1), u(2, 1)};
  const GameOutcome g = solve_marking(two);
  // Derived by hand: Ann colors 0 with 1, Ben's only move colors 1 with 2.
  EXPECT_EQ(g.winner, Player::kAnn);
  EXPECT_EQ(g.explored_states, 3u);
  ASSERT_EQ(g.strategy.size(), 1u);
  EXPECT_EQ(g.strategy.begin()->second, (GameMove{0, 1, Subset{}}));
  expect_strategy_holds(MarkingGame(two, Player::kAnn), g, 3);
  EXPECT_EQ(solve_marking(two, Player::kBen).winner, Player::kAnn);

  const Matroid empty = u(0, 0);
  const GameOutcome vacuous = solve_marking({empty, empty});
  EXPECT_EQ(vacuous.winner, Player::kAnn);
  EXPECT_EQ(vacuous.explored_states, 1u);
}

TEST(MarkingGameTest, BenCanBlockSingleColor) {
  // One color on two parallel elements: the first move leaves the other
  // element without a legal color.
  EXPECT_EQ(solve_marking({u(2, 1)}).winner, Player::kBen);
}

TEST(MarkingGameTest, DoubledSystemsWithChromaticOneAreAnnWins) {
  for (const Matroid& m : testing::corpus_matroids(5)) {
    if (chromatic_number(m) != 1) continue;
    EXPECT_EQ(solve_marking({m, m}).winner, Player::kAnn);
  }
}

TEST(TwoCoveringTest, BasicCases) {
  const auto a = two_covering({free_m(2), free_m(2)});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], (Subset{0, 1}));
  EXPECT_EQ(a[1], (Subset{0, 1}));

  const std::vector<Matroid> four(4, k4());
  const auto b = two_covering(four);
  ASSERT_EQ(b.size(), 4u);
  for (const Subset& part : b) EXPECT_TRUE(testing::is_forest_dfs(k4_graph(), part));
  for (int e = 0; e < 6; ++e) {
    int hits = 0;
    for (const Subset& part : b) hits += part.contains(e) ? 1 : 0;
    EXPECT_EQ(hits, 2);
  }

  EXPECT_THROW(two_covering({free_m(2), u(2, 1)}), PreconditionViolated);
  EXPECT_THROW(two_covering({free_m(2), free_m(2), free_m(2)}), Error);
}

TEST(PaintingGameTest, BasicCases) {
  const std::vector<Matroid> two{u(2, 1), u(2, 1)};
  const GameOutcome a = solve_painting(two, 2, PaintingRules::kNoDeadElement);
  EXPECT_EQ(a.winner, Player::kAnn);
  expect_strategy_holds(PaintingGame(two, 2, PaintingRules::kNoDeadElement), a, 4);

  EXPECT_EQ(solve_painting({free_m(3)}, 1).winner, Player::kAnn);

  const GameOutcome strict = solve_painting(two, 2, PaintingRules::kStrictAllColored);
  EXPECT_EQ(strict.winner, Player::kBen);
  expect_strategy_holds(PaintingGame(two, 2, PaintingRules::kStrictAllColored), strict, 5);
  // Ben's first winning move is the empty pick.
  const PaintingGame strict_game(two, 2, PaintingRules::kStrictAllColored);
  EXPECT_EQ(strict.strategy.at(strict_game.key(strict_game.initial())).set, Subset{});
}

TEST(PaintingGameTest, SingleRoundMarkBudget) {
  // With k = 2 and one round Ben offers {0,1}; Ann colors one, but the other
  // has only been picked once, so it is not dead. Ann survives.
  EXPECT_EQ(solve_painting({u(2, 1)}, 2).winner, Player::kAnn);
  // With k = 1 the uncolored element is dead.
  EXPECT_EQ(solve_painting({u(2, 1)}, 1).winner, Player::kBen);
}

TEST(PaintingGameTest, Guards) {
  EXPECT_THROW(solve_painting({free_m(6)}, 1), StateSpaceTooLarge);
  const Matroid m = free_m(2);
  EXPECT_THROW(solve_painting({m, m, m, m}, 1), StateSpaceTooLarge);
  EXPECT_THROW(solve_painting({m}, 0), StateSpaceTooLarge);
}

TEST(GameSolverTest, DeterministicOutcomes) {
  const std::vector<Matroid> sys{k4(), k4()};
  const GameOutcome a = solve_indicated(sys);
  const GameOutcome b = solve_indicated(sys);
  EXPECT_EQ(a.winner, b.winner);
  EXPECT_EQ(a.explored_states, b.explored_states);
  EXPECT_EQ(a.strategy, b.strategy);
  EXPECT_EQ(a.winner, Player::kAnn);
  expect_strategy_holds(IndicatedGame(sys), a, 6);

  const std::vector<Matroid> p{build_matroid(cycle_spec(3)), build_matroid(cycle_spec(3))};
  const GameOutcome c = solve_painting(p, 2);
  const GameOutcome d = solve_painting(p, 2);
  EXPECT_EQ(c.explored_states, d.explored_states);
  EXPECT_EQ(c.strategy, d.strategy);
  expect_strategy_holds(PaintingGame(p, 2, PaintingRules::kNoDeadElement), c, 7);
}

TEST(GameSolverTest, PrincipalLineEndsWithDeclaredWinner) {
  const std::vector<Matroid> sys{u(3, 1), u(3, 1)};
  const IndicatedGame game(sys);
  const GameOutcome out = solve_game(game);
  EXPECT_EQ(out.winner, Player::kBen);
  const auto line = principal_line(game, out);
  auto s = game.initial();
  for (const TranscriptStep& step : line) {
    EXPECT_EQ(step.state, game.key(s));
    s = game.play(s, step.move);
  }
  EXPECT_EQ(game.winner(s), Player::kBen);
}

TEST(ConjectureSearchTest, BasicCases) {
  ConjectureFamily pair{2, {uniform_spec(2, 1), free_spec(2)}, false};
  const ConjectureReport a = painting_conjecture_search({pair}, PaintingRules::kNoDeadElement);
  EXPECT_EQ(a.records.size(), 4u);
  EXPECT_EQ(a.solved, 4u);
  EXPECT_EQ(a.ben_wins, 0u);

  std::vector<ConjectureFamily> base;
  for (int n = 1; n <= 3; ++n) base.push_back({n, {uniform_spec(n, 1)}, true});
  const ConjectureReport b = painting_conjecture_search(base, PaintingRules::kNoDeadElement);
  EXPECT_EQ(b.solved, 3u);
  EXPECT_EQ(b.ann_wins, 3u);
  EXPECT_EQ(b.base_case_violations, 0u);

  const ConjectureReport c = painting_conjecture_search({}, PaintingRules::kNoDeadElement);
  EXPECT_TRUE(c.records.empty());
  EXPECT_EQ(c.solved + c.skipped + c.ann_wins + c.ben_wins, 0u);
}

TEST(ConjectureSearchTest, StrictRulesSurfaceTranscripts) {
  ConjectureFamily pair{2, {uniform_spec(2, 1)}, false};
  const ConjectureReport r = painting_conjecture_search({pair}, PaintingRules::kStrictAllColored);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].winner, Player::kBen);
  EXPECT_FALSE(r.records[0].transcript.empty());
  EXPECT_EQ(r.base_case_violations, 1u);
}

TEST(ConjectureSearchTest, ParallelMatchesSequential) {
  ConjectureFamily fam{2, {uniform_spec(3, 1), uniform_spec(3, 2), free_spec(3), cycle_spec(3)},
                       false};
  const auto one = painting_conjecture_search({fam}, PaintingRules::kNoDeadElement, 1);
  const auto four = painting_conjecture_search({fam}, PaintingRules::kNoDeadElement, 4);
  ASSERT_EQ(one.records.size(), four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].index, i);
    EXPECT_EQ(one.records[i].members, four.records[i].members);
    EXPECT_EQ(one.records[i].winner, four.records[i].winner);
    EXPECT_EQ(one.records[i].explored_states, four.records[i].explored_states);
  }
  EXPECT_EQ(one.ben_wins, 0u);
}

TEST(ConjectureSearchTest, FiltersAndSkips) {
  // uniform(3,1) has χ = 3 > 2 and is dropped; free(6) is over the guard.
  ConjectureFamily fam{2, {uniform_spec(3, 1), free_spec(3)}, false};
  const auto r = painting_conjecture_search({fam}, PaintingRules::kNoDeadElement);
  EXPECT_EQ(r.records.size(), 1u);
  ConjectureFamily big{1, {free_spec(6)}, true};
  const auto s = painting_conjecture_search({big}, PaintingRules::kNoDeadElement);
  ASSERT_EQ(s.records.size(), 1u);
  EXPECT_TRUE(s.records[0].skipped);
  EXPECT_EQ(s.skipped, 1u);
}

}  // namespace
}  // namespace coopmat
