#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "egk/epsilon_kripke.hpp"
#include "egk/game.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk {

/// A belief of player i over S_j x T_j, stored as a |S_j| x |T_j| matrix.
using PairDistribution = RationalMatrix;

/// Finite lexicographic type model. beliefs[i][t] lists the levels of
/// type t of player i, primary level first.
struct LexEpistemicModel {
  Game game;
  std::array<std::vector<std::string>, 2> types;
  std::array<std::vector<std::vector<PairDistribution>>, 2> beliefs;

  int num_types(Player i) const { return static_cast<int>(types[index(i)].size()); }
  const std::vector<PairDistribution>& belief(Player i, int t) const {
    return beliefs[index(i)][static_cast<std::size_t>(t)];
  }
  /// Throws InputError naming the label.
  int type_index(Player i, std::string_view label) const;
};

/// Finite probabilistic type model: one distribution per type.
struct ProbEpistemicModel {
  Game game;
  std::array<std::vector<std::string>, 2> types;
  std::array<std::vector<PairDistribution>, 2> beliefs;

  int num_types(Player i) const { return static_cast<int>(types[index(i)].size()); }
  const PairDistribution& belief(Player i, int t) const {
    return beliefs[index(i)][static_cast<std::size_t>(t)];
  }
  int type_index(Player i, std::string_view label) const;
};

/// Throws InputError on shape errors, duplicate labels, empty level lists or
/// levels that are not probability distributions.
void validate(const LexEpistemicModel& model);
void validate(const ProbEpistemicModel& model);

/// Opponent types deemed possible by (i, t), in index order.
std::vector<int> deems_possible(const LexEpistemicModel& model, Player i, int t);
std::vector<int> deems_possible(const ProbEpistemicModel& model, Player i, int t);

bool type_caution(const LexEpistemicModel& model, Player i, int t);
bool type_caution(const ProbEpistemicModel& model, Player i, int t);

std::vector<int> optimal_strategies(const LexEpistemicModel& model, Player i, int t);
std::vector<int> optimal_strategies(const ProbEpistemicModel& model, Player i, int t);

bool primary_belief_in_rationality(const LexEpistemicModel& model, Player i, int t);
bool eps_trembling(const ProbEpistemicModel& model, Player i, int t, const Epsilon& eps);

/// Per-type truth values of a property.
struct TypeProperty {
  std::string name;
  std::array<std::vector<bool>, 2> holds;

  bool at(Player i, int t) const { return holds[index(i)][static_cast<std::size_t>(t)]; }
};

TypeProperty caution_property(const LexEpistemicModel& model);
TypeProperty caution_property(const ProbEpistemicModel& model);
TypeProperty primary_rationality_property(const LexEpistemicModel& model);
TypeProperty eps_trembling_property(const ProbEpistemicModel& model, const Epsilon& eps);
TypeProperty conjunction(const TypeProperty& a, const TypeProperty& b);

/// Per-player sorted type indices.
using TypeSets = std::array<std::vector<int>, 2>;

/// Greatest set of types satisfying P that deem possible only types in the
/// set. `rounds`, when given, receives the number of elimination rounds.
TypeSets common_full_belief(const LexEpistemicModel& model, const TypeProperty& p,
                            int* rounds = nullptr);
TypeSets common_full_belief(const ProbEpistemicModel& model, const TypeProperty& p,
                            int* rounds = nullptr);

/// Strategies optimal for some type expressing common full belief in
/// caution and primary belief in rationality. Model-relative.
std::array<std::vector<int>, 2> permissible(const LexEpistemicModel& model);
/// Same with caution and the ε-trembling condition.
std::array<std::vector<int>, 2> eps_permissible(const ProbEpistemicModel& model,
                                                const Epsilon& eps);

/// Ordered model over worlds (t_1, t_2, s_1, s_2) in lexicographic order.
/// Adjacent duplicate levels are merged first. Throws PreconditionError for
/// non-cautious types or repeated non-adjacent levels.
OrderedKripkeModel build_ordered_from_lex(const LexEpistemicModel& model);

/// World index of (t_1, t_2, s_1, s_2) in build_ordered_from_lex's output.
int lex_world_index(const LexEpistemicModel& model, std::array<int, 2> types,
                    std::array<int, 2> profile);

struct ExtractedTypes {
  ProbEpistemicModel model;
  /// type_of_world[i][w]: i's type at world w.
  std::array<std::vector<int>, 2> type_of_world;
};

/// Types are classes of worlds with equal (R_i(w), p_i(w)); classes whose
/// belief hierarchies coincide are then merged.
ExtractedTypes extract_prob_model(const ProbKripkeModel& model);

/// One type per DF survivor s_i of each player: primary level is a
/// justifying belief within the DF survivors paired with the matching
/// types, second level a full-support cautious justifying belief spread
/// over the same types. Every type is cautious and primarily believes in
/// rationality. Type labels are "<player>:<strategy>".
LexEpistemicModel build_df_lex_model(const Game& game);

}  // namespace egk
