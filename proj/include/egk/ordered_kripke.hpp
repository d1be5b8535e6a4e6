#pragma once

#include <array>
#include <vector>

#include "egk/kripke.hpp"

namespace egk {

/// Standard model plus a lexicographic belief per player and world.
/// lambda[i][w] is K x |W|; row k is the level-(k+1) distribution.
struct OrderedKripkeModel {
  StandardKripkeModel base;
  std::array<std::vector<RationalMatrix>, 2> lambda;

  const RationalMatrix& levels(Player i, int w) const {
    return lambda[index(i)][static_cast<std::size_t>(w)];
  }
  int num_levels(Player i, int w) const { return static_cast<int>(levels(i, w).rows()); }
};

/// validate_standard plus measure, support and injectivity of every λ_i(w).
std::vector<Violation> validate_ordered(const OrderedKripkeModel& model);

/// λ_i(w') = λ_i(w) for every w' ∈ R_i(w). Not part of validate_ordered;
/// the ε-models built from an ordered model satisfy p_i-constancy exactly
/// when this holds.
std::vector<Violation> check_lambda_constancy(const OrderedKripkeModel& model);

/// Every opponent strategy gets positive weight at some level, at every
/// world, for both players.
std::vector<Violation> check_caution(const OrderedKripkeModel& model);

/// K x |S_i| matrix: row k holds u_i(s, level-k opponent mixture) for all s.
RationalMatrix level_utilities(const OrderedKripkeModel& model, Player i, int w);

/// Compares s against t under i's lexicographic belief at w. `greater`
/// means s is strictly preferred.
LexOrder lex_prefers(const OrderedKripkeModel& model, Player i, int w, int s, int t);

/// Lexicographically maximal strategies of i at w, in file order.
std::vector<int> lex_optimal(const OrderedKripkeModel& model, Player i, int w);

RationalitySets lrat(const OrderedKripkeModel& model);

/// R_i^1: supports of the first level.
AccessRelation level1_access(const OrderedKripkeModel& model, Player i);
EventSet level1_belief(const OrderedKripkeModel& model, Player i, const EventSet& e);
EventSet common_level1_belief(const OrderedKripkeModel& model, const EventSet& e);

struct StructuralReport {
  bool disjoint_supports = true;
  bool surjection = true;
  std::vector<Violation> violations;
};

StructuralReport check_structural_conditions(const OrderedKripkeModel& model);

}  // namespace egk
