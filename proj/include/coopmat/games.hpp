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

// Exact solvers for three two-player coloring games on a matroid system
// M_1..M_t over one ground set. Ann wants every element colored, Ben wants
// to prevent it; color class i must stay independent in M_i.
//
//  * indicated: Ann points at an uncolored element, Ben must give it some
//    legal color, and loses only his choice of color.
//  * marking: players alternately color any uncolored element legally.
//  * painting: in round i Ben offers a set B_i, Ann colors an independent
//    A_i ⊆ B_i with color i. An element may be offered at most k times.
//
// Each game is an engine (states, moves, terminal test); GameSolver runs a
// memoized minimax over any engine.

#ifndef COOPMAT_GAMES_HPP_
#define COOPMAT_GAMES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coopmat/matroid.hpp"
#include "coopmat/subset.hpp"

namespace coopmat {

enum class Player { kAnn, kBen };
std::string to_string(Player p);

/// One move of any game. Unused fields keep their defaults.
struct GameMove {
  int element = -1;  // indicated (Ann), marking
  int color = 0;     // indicated (Ben), marking; 1-based
  Subset set;        // painting: B_i for Ben, A_i for Ann

  bool operator==(const GameMove&) const = default;
};

struct GameOutcome {
  Player winner = Player::kAnn;
  /// Canonical state key -> winning move, for every explored state whose
  /// mover wins it.
  std::unordered_map<std::uint64_t, GameMove> strategy;
  std::size_t explored_states = 0;
};

// Guards on the exhaustive searches.
inline constexpr int kMaxIndicatedElements = 8;
inline constexpr int kMaxIndicatedColors = 4;
inline constexpr int kMaxPaintingElements = 5;
inline constexpr int kMaxPaintingColors = 3;
inline constexpr int kMaxPaintingMarks = 7;

class IndicatedGame {
 public:
  struct State {
    std::vector<Subset> classes;
    int pointed = -1;
  };

  /// Throws StateSpaceTooLarge above the guards.
  explicit IndicatedGame(std::vector<Matroid> ms);

  State initial() const;
  std::uint64_t key(const State& s) const;
  Player mover(const State& s) const;
  std::optional<Player> winner(const State& s) const;
  std::vector<GameMove> moves(const State& s) const;
  State play(const State& s, const GameMove& m) const;

 private:
  std::vector<Matroid> ms_;
  int n_;
};

class MarkingGame {
 public:
  struct State {
    std::vector<Subset> classes;
    Player to_move = Player::kAnn;
  };

  MarkingGame(std::vector<Matroid> ms, Player first);

  State initial() const;
  std::uint64_t key(const State& s) const;
  Player mover(const State& s) const { return s.to_move; }
  /// Ann wins once everything is colored; Ben as soon as some uncolored
  /// element has no legal color left (classes only grow).
  std::optional<Player> winner(const State& s) const;
  std::vector<GameMove> moves(const State& s) const;
  State play(const State& s, const GameMove& m) const;

 private:
  std::vector<Matroid> ms_;
  int n_;
  Player first_;
};

enum class PaintingRules {
  /// Ben wins iff some element is offered k times and stays uncolored.
  kNoDeadElement,
  /// Ann wins iff every element is colored after the last round.
  kStrictAllColored,
};
std::string to_string(PaintingRules rules);

class PaintingGame {
 public:
  struct State {
    std::vector<Subset> classes;
    std::vector<int> marks;
    int round = 0;  // 0-based; round r uses color r + 1
    bool ann_phase = false;
    Subset offered;
  };

  /// Runs exactly t = ms.size() rounds.
  PaintingGame(std::vector<Matroid> ms, int k, PaintingRules rules);

  State initial() const;
  std::uint64_t key(const State& s) const;
  Player mover(const State& s) const {
    return s.ann_phase ? Player::kAnn : Player::kBen;
  }
  std::optional<Player> winner(const State& s) const;
  std::vector<GameMove> moves(const State& s) const;
  State play(const State& s, const GameMove& m) const;

 private:
  std::vector<Matroid> ms_;
  int n_;
  int k_;
  PaintingRules rules_;
};

/// Memoized minimax. Move order is the engine's, and the first winning move
/// found is kept, so results are deterministic.
template <class Game>
class GameSolver {
 public:
  explicit GameSolver(const Game& game) : game_(game) {}

  GameOutcome solve() {
    const bool ann = ann_wins(game_.initial());
    outcome_.winner = ann ? Player::kAnn : Player::kBen;
    outcome_.explored_states = memo_.size();
    return std::move(outcome_);
  }

 private:
  bool ann_wins(const typename Game::State& s) {
    const std::uint64_t k = game_.key(s);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    bool result;
    if (std::optional<Player> w = game_.winner(s)) {
      result = *w == Player::kAnn;
    } else {
      const Player mover = game_.mover(s);
      bool mover_wins = false;
      for (const GameMove& m : game_.moves(s)) {
        if (ann_wins(game_.play(s, m)) == (mover == Player::kAnn)) {
          outcome_.strategy.emplace(k, m);
          mover_wins = true;
          break;
        }
      }
      result = mover_wins == (mover == Player::kAnn);
    }
    memo_.emplace(k, result);
    return result;
  }

  const Game& game_;
  std::unordered_map<std::uint64_t, bool> memo_;
  GameOutcome outcome_;
};

template <class Game>
GameOutcome solve_game(const Game& game) {
  return GameSolver<Game>(game).solve();
}

/// Plays one game in which the declared winner follows the stored strategy
/// and the opponent moves uniformly at random. Returns the actual winner.
template <class Game>
Player replay_against_random(const Game& game, const GameOutcome& outcome,
                             std::mt19937_64& rng) {
  typename Game::State s = game.initial();
  while (true) {
    if (std::optional<Player> w = game.winner(s)) return *w;
    GameMove move;
    if (game.mover(s) == outcome.winner) {
      auto it = outcome.strategy.find(game.key(s));
      if (it == outcome.strategy.end()) {
        throw std::logic_error("strategy has no move for a reachable state");
      }
      move = it->second;
    } else {
      const std::vector<GameMove> options = game.moves(s);
      move = options[rng() % options.size()];
    }
    s = game.play(s, move);
  }
}

struct TranscriptStep {
  std::uint64_t state = 0;
  Player mover = Player::kAnn;
  GameMove move;
};

/// The winner follows the strategy, the loser takes its first listed move.
template <class Game>
std::vector<TranscriptStep> principal_line(const Game& game,
                                           const GameOutcome& outcome) {
  std::vector<TranscriptStep> line;
  typename Game::State s = game.initial();
  while (!game.winner(s)) {
    const Player mover = game.mover(s);
    const std::uint64_t k = game.key(s);
    GameMove move = mover == outcome.winner ? outcome.strategy.at(k)
                                            : game.moves(s).front();
    line.push_back({k, mover, move});
    s = game.play(s, move);
  }
  return line;
}

GameOutcome solve_indicated(const std::vector<Matroid>& ms);
GameOutcome solve_marking(const std::vector<Matroid>& ms,
                          Player first = Player::kAnn);
GameOutcome solve_painting(const std::vector<Matroid>& ms, int k,
                           PaintingRules rules = PaintingRules::kNoDeadElement);

/// Sets A_1..A_2k with A_i independent in M_i and every element in exactly
/// two of them, from cooperative colorings of each half of the system.
/// Throws PreconditionViolated if some χ(M_i) > k.
std::vector<Subset> two_covering(const std::vector<Matroid>& ms);

/// Systems of k matroids over a pool, all on one ground size.
struct ConjectureFamily {
  int k = 2;
  std::vector<MatroidSpec> pool;
  /// Ordered k-tuples from the pool when false; only (M, ..., M) when true.
  bool single_matroid_only = false;
};

struct ConjectureRecord {
  std::size_t index = 0;
  std::size_t family = 0;
  std::vector<std::size_t> members;  // pool indices
  int k = 0;
  bool single_matroid = false;
  bool skipped = false;
  std::string skip_reason;
  Player winner = Player::kAnn;
  std::size_t explored_states = 0;
  std::vector<TranscriptStep> transcript;  // filled for Ben wins
};

struct ConjectureReport {
  std::vector<ConjectureRecord> records;
  std::size_t solved = 0;
  std::size_t skipped = 0;
  std::size_t ann_wins = 0;
  std::size_t ben_wins = 0;
  /// Ben wins on single-matroid systems, which must not happen.
  std::size_t base_case_violations = 0;
};

/// Solves the painting game for every system in the catalog whose members
/// all have χ <= k and deal with one ground size. Systems above the solver
/// guards are recorded as skipped. Records are ordered by instance index
/// whatever the worker count.
ConjectureReport painting_conjecture_search(
    const std::vector<ConjectureFamily>& catalog, PaintingRules rules,
    int workers = 1);

}  // namespace coopmat

#endif  // COOPMAT_GAMES_HPP_
