#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "egk/epsilon_kripke.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk {

/// How level masses of λ_i(w) become one probability measure.
///   perfect: level 1 gets 1-ε, level k in 2..K-1 gets ε^{k-1}(1-ε), the last
///            level gets ε^{K-1}; within a level, mass follows λ_i(w)(k).
///   proper:  level masses chosen so every deeper-level world weighs at most
///            ε times every shallower-level world.
enum class WeightingScheme { perfect, proper };

WeightingScheme parse_weighting_scheme(std::string_view text);
std::string to_string(WeightingScheme scheme);

/// Strictly decreasing ε_0 > ε_1 > ... in (0, 1/2).
class EpsilonSchedule {
 public:
  /// Throws InputError unless strictly decreasing inside (0, 1/2).
  explicit EpsilonSchedule(std::vector<Rational> values);

  /// "geometric:r,N[,first]" gives ε_n = first·r^n for n = 0..N-1; `first`
  /// defaults to r^2, so "geometric:1/2,9" is (1/2)^{n+2}.
  static EpsilonSchedule parse(std::string_view text);

  const std::vector<Rational>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<Rational> values_;
};

/// M^ε over the same worlds, access and σ. Throws PreconditionError naming
/// the failed condition unless the model is valid, cautious, and satisfies
/// disjoint supports and surjection, or when ε >= 1/2.
ProbKripkeModel build_epsilon_model(const OrderedKripkeModel& model, const Epsilon& eps,
                                    WeightingScheme scheme);

/// Pairs (w', w'') where w' sits at a deeper level of λ_i(w) than w'' but
/// p_i(w)(w') > ε·p_i(w)(w''), or where an accessible world gets weight 0.
std::vector<Violation> check_proper_condition(const OrderedKripkeModel& ordered,
                                              const ProbKripkeModel& model, const Epsilon& eps);

struct ConvergenceReport {
  std::vector<Rational> eps;
  std::vector<EventSet> rat;
  /// cb[n] = CB^{>ε_n}(RAT) in M^{ε_n}.
  std::vector<EventSet> cb;
  /// tail[m] = ∩_{n >= m} cb[n].
  std::vector<EventSet> tail;
  int stabilization_index = 0;
  EventSet stabilized;
  /// CB¹(LRAT) in the ordered model.
  EventSet level1;
  bool matches = false;
  std::vector<ProbKripkeModel> family;
};

ConvergenceReport verify_convergence(const OrderedKripkeModel& model,
                                     const EpsilonSchedule& schedule, WeightingScheme scheme);

struct LimitViolation {
  int clause;  // 1, 2 or 3
  int n;
  Player player;
  int world;
  int other;
  std::string detail;
};

/// Finite checks of the limit behaviour of a family built over `schedule`:
///   1. worlds outside level 1 weigh at most ε_n and never increase with n;
///   2. level-1 worlds differ from λ_i(w)(1) by at most the mass outside level 1;
///   3. within each level, weights are proportional to λ_i(w)(k).
std::vector<LimitViolation> check_limit_conditions(const OrderedKripkeModel& model,
                                                   const std::vector<ProbKripkeModel>& family,
                                                   const EpsilonSchedule& schedule);

}  // namespace egk
