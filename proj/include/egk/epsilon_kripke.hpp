#pragma once

#include <string_view>
#include <vector>

#include "egk/kripke.hpp"

namespace egk {

/// Tolerance ε in (0, 1). The upper-ε operators additionally need ε < 1/2.
class Epsilon {
 public:
  /// Throws InputError outside (0, 1).
  explicit Epsilon(Rational value);
  static Epsilon parse(std::string_view text) { return Epsilon(parse_rational(text)); }

  const Rational& value() const { return value_; }
  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  Rational value_;
};

/// Which optimality test marks an accessible world w' as a tremble.
///   pointwise: σ_j(w') is not a best response for j to the pure σ_i(w').
///   belief:    w' is not in RAT_j, i.e. σ_j(w') is not optimal for j's own
///              belief at w'.
enum class TremblingReading { pointwise, belief };

TremblingReading parse_trembling_reading(std::string_view text);

/// Every opponent strategy carried by a positively weighted accessible world.
std::vector<Violation> check_prob_caution(const ProbKripkeModel& model);

/// Accessible worlds marked as trembles must get p_i(w)(w') <= ε.
std::vector<Violation> check_trembling(const ProbKripkeModel& model, const Epsilon& eps,
                                       TremblingReading reading = TremblingReading::pointwise);

/// R_i^{>ε}(w) = {w' ∈ R_i(w) : p_i(w)(w') > ε}. Throws InputError unless
/// ε < 1/2.
AccessRelation upper_access(const ProbKripkeModel& model, Player i, const Epsilon& eps);
EventSet upper_belief(const ProbKripkeModel& model, Player i, const Epsilon& eps,
                      const EventSet& e);
EventSet upper_common_belief(const ProbKripkeModel& model, const Epsilon& eps, const EventSet& e);

}  // namespace egk
