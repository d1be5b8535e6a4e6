#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "egk/game.hpp"

namespace egk {

/// Surviving strategy indices per player, in file order.
struct Restriction {
  std::array<std::vector<int>, 2> survivors;

  static Restriction full(const Game& game);
  const std::vector<int>& of(Player p) const { return survivors[index(p)]; }
  bool contains(Player p, int s) const;
  bool contains_profile(int s1, int s2) const {
    return contains(Player::one, s1) && contains(Player::two, s2);
  }
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

enum class Phase { weak, strict };
std::string to_string(Phase phase);

struct Elimination {
  Player player;
  int strategy;
  MixedStrategy dominator;
};

struct EliminationRound {
  Phase phase;
  std::vector<Elimination> eliminated;
};

/// Audit trail of an elimination procedure; rounds without eliminations are
/// not recorded.
struct EliminationTrace {
  std::vector<EliminationRound> rounds;
};

struct EliminationResult {
  Restriction survivors;
  EliminationTrace trace;
};

/// Mixture over r's strategies for `i` other than `s_i` that does strictly
/// better than `s_i` against every surviving opponent strategy, or nullopt.
/// Decided exactly by maximising the minimum margin.
std::optional<MixedStrategy> strictly_dominated(const Game& game, const Restriction& r, Player i,
                                                int s_i);

/// Mixture that does at least as well everywhere and strictly better
/// somewhere (maximises total slack), or nullopt.
std::optional<MixedStrategy> weakly_dominated(const Game& game, const Restriction& r, Player i,
                                              int s_i);

/// Belief over the opponent's restricted strategies to which `s_i` is a best
/// response among i's restricted strategies. Present iff strictly_dominated
/// is absent.
std::optional<MixedStrategy> justifying_belief(const Game& game, const Restriction& r, Player i,
                                               int s_i);

/// Full-support version of justifying_belief over the restricted opponent
/// set. Present iff weakly_dominated is absent.
std::optional<MixedStrategy> cautious_justifying_belief(const Game& game, const Restriction& r,
                                                        Player i, int s_i);

/// One round of simultaneous weak-dominance elimination in the full game,
/// then iterated simultaneous strict dominance to a fixed point.
EliminationResult dekel_fudenberg(const Game& game);

/// Iterated simultaneous elimination of strategies strictly dominated by
/// mixed strategies.
EliminationResult iesds(const Game& game);

/// Strict-dominance elimination from an arbitrary starting restriction;
/// appends its rounds to `trace`.
Restriction iterate_strict_dominance(const Game& game, Restriction start, EliminationTrace& trace);

/// Exact re-check of a dominator: strict (or weak) inequalities against every
/// opponent strategy surviving in `r`.
bool verifies_strict_dominance(const Game& game, const Restriction& r, Player i, int s_i,
                               const MixedStrategy& dominator);
bool verifies_weak_dominance(const Game& game, const Restriction& r, Player i, int s_i,
                             const MixedStrategy& dominator);

}  // namespace egk
