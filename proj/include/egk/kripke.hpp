#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egk/dominance.hpp"
#include "egk/game.hpp"

namespace egk {

/// Subset of a model's worlds, indexed by world position.
using EventSet = Eigen::Array<bool, Eigen::Dynamic, 1>;
/// access(w, w') is true iff w' is accessible from w.
using AccessRelation = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline EventSet empty_event(int n) { return EventSet::Constant(n, false); }
inline EventSet full_event(int n) { return EventSet::Constant(n, true); }
EventSet make_event(int n, std::initializer_list<int> members);
EventSet make_event(int n, const std::vector<int>& members);
std::vector<int> members(const EventSet& e);

template <typename DerivedA, typename DerivedB>
bool is_subset(const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b) {
  return (!a || b).all();
}

/// {w : access(w, .) ⊆ e}. Every belief-style operator in the library is
/// this kernel applied to a different accessibility relation.
template <typename Derived>
EventSet worlds_believing(const Eigen::ArrayBase<Derived>& access, const EventSet& e) {
  EventSet out(access.rows());
  for (Eigen::Index w = 0; w < access.rows(); ++w) {
    out(w) = is_subset(access.row(w).transpose(), e);
  }
  return out;
}

/// W, per-player accessibility R_i and strategy assignment σ_i.
struct StandardKripkeModel {
  Game game;
  std::vector<std::string> worlds;
  std::array<AccessRelation, 2> access;
  std::array<std::vector<int>, 2> sigma;

  int num_worlds() const { return static_cast<int>(worlds.size()); }
  std::optional<int> find_world(std::string_view label) const;
  /// Throws InputError naming the label.
  int world_index(std::string_view label) const;
  const AccessRelation& relation(Player p) const { return access[index(p)]; }
  int strategy_at(Player p, int w) const { return sigma[index(p)][static_cast<std::size_t>(w)]; }
  std::vector<int> accessible(Player p, int w) const;
};

/// Adds p_i: row w of p[i] is the measure p_i(w) over worlds.
struct ProbKripkeModel {
  StandardKripkeModel base;
  std::array<RationalMatrix, 2> p;

  const RationalMatrix& measure(Player i) const { return p[index(i)]; }
};

enum class Rule {
  world_count,
  sigma_range,
  seriality,
  transitivity,
  euclideanness,
  sigma_constancy,
  probability_measure,
  support,
  p_constancy,
  lambda_measure,
  lambda_support,
  lambda_injectivity,
  lambda_constancy,
  caution,
  trembling,
  disjoint_supports,
  surjection,
};

std::string to_string(Rule rule);

/// A failed axiom instance. `worlds` lists the offending worlds in the order
/// the axiom mentions them; `detail` is a human-readable explanation.
struct Violation {
  Rule rule;
  Player player;
  std::vector<int> worlds;
  std::string detail;
};

std::string describe(const Violation& v, const StandardKripkeModel& model);

/// KD45 axioms for each R_i plus σ_i range and constancy on R_i(w).
std::vector<Violation> validate_standard(const StandardKripkeModel& model);
/// validate_standard plus: each p_i(w) a probability measure supported in
/// R_i(w) and constant along R_i.
std::vector<Violation> validate_probabilistic(const ProbKripkeModel& model);

EventSet belief(const StandardKripkeModel& model, Player i, const EventSet& e);
/// One-step mutual belief over the union of both accessibility relations.
EventSet common_belief(const StandardKripkeModel& model, const EventSet& e);

/// W x |S_p| 0/1 matrix with a single 1 per row at σ_p(w).
RationalMatrix strategy_indicator(const StandardKripkeModel& model, Player p);

/// Σ_{w'} p_i(w)(w') · point(σ_j(w')), as a vector over S_j.
RationalVector induced_opponent_mixture(const ProbKripkeModel& model, Player i, int w);

struct RationalitySets {
  std::array<EventSet, 2> player;
  EventSet all;

  const EventSet& of(Player p) const { return player[index(p)]; }
};

/// RAT_i = worlds where σ_i(w) maximises expected utility against the
/// induced opponent mixture; RAT = RAT_1 ∩ RAT_2.
RationalitySets rat(const ProbKripkeModel& model);

struct IedsCheckReport {
  EventSet cb_rat;
  Restriction ieds;
  /// Worlds in CB(RAT) whose profile is not in S^IEDS.
  std::vector<int> failures;
  bool holds = true;
};

/// For each w ∈ CB(RAT), checks σ(w) ∈ S^IEDS.
IedsCheckReport check_theorem_1_1(const ProbKripkeModel& model);

/// Model over the surviving profiles in which every world is rational and
/// commonly believed rational. Returns the model and the world carrying
/// `profile` (strategy indices in player order).
std::pair<ProbKripkeModel, int> construct_ieds_witness(const Game& game,
                                                       std::array<int, 2> profile);

}  // namespace egk
