#include "egk/epsilon_kripke.hpp"

#include <string>

#include "egk/error.hpp"

namespace egk {
namespace {

void require_operator_range(const Epsilon& eps) {
  if (eps.value() >= Rational(1, 2)) {
    throw InputError("upper-ε operators need ε < 1/2, got " + to_string(eps.value()));
  }
}

bool best_response_to_pure(const Game& game, Player j, int s_j, int s_i) {
  const auto& u = game.utility(j);
  return u(s_j, s_i) == u.col(s_i).maxCoeff();
}

}  // namespace

Epsilon::Epsilon(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ >= 1) {
    throw InputError("ε must lie in (0, 1), got " + to_string(value_));
  }
}

TremblingReading parse_trembling_reading(std::string_view text) {
  if (text == "pointwise") return TremblingReading::pointwise;
  if (text == "belief") return TremblingReading::belief;
  throw InputError("unknown trembling reading '" + std::string(text) +
                   "' (expected pointwise or belief)");
}

std::vector<Violation> check_prob_caution(const ProbKripkeModel& model) {
  std::vector<Violation> out;
  const auto& base = model.base;
  const int n = base.num_worlds();
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    const auto& p = model.measure(i);
    for (int w = 0; w < n; ++w) {
      std::vector<bool> seen(static_cast<std::size_t>(base.game.num_strategies(j)), false);
      for (int v = 0; v < n; ++v) {
        if (base.relation(i)(w, v) && p(w, v) > 0) {
          seen[static_cast<std::size_t>(base.strategy_at(j, v))] = true;
        }
      }
      for (std::size_t s = 0; s < seen.size(); ++s) {
        if (!seen[s]) {
          out.push_back({Rule::caution, i, {w},
                         "opponent strategy " + base.game.strategy_label(j, static_cast<int>(s)) +
                             " gets no weight"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_trembling(const ProbKripkeModel& model, const Epsilon& eps,
                                       TremblingReading reading) {
  std::vector<Violation> out;
  const auto& base = model.base;
  const int n = base.num_worlds();
  const RationalitySets rational = rat(model);
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    const auto& p = model.measure(i);
    for (int w = 0; w < n; ++w) {
      for (int v = 0; v < n; ++v) {
        if (!base.relation(i)(w, v) || p(w, v) <= eps.value()) continue;
        const bool tremble =
            reading == TremblingReading::pointwise
                ? !best_response_to_pure(base.game, j, base.strategy_at(j, v), base.strategy_at(i, v))
                : !rational.of(j)(v);
        if (tremble) {
          out.push_back({Rule::trembling, i, {w, v},
                         "non-optimal world weighted " + to_string(p(w, v)) + " > ε = " +
                             to_string(eps.value())});
        }
      }
    }
  }
  return out;
}

AccessRelation upper_access(const ProbKripkeModel& model, Player i, const Epsilon& eps) {
  require_operator_range(eps);
  return model.base.relation(i) && (model.measure(i).array() > eps.value());
}

EventSet upper_belief(const ProbKripkeModel& model, Player i, const Epsilon& eps,
                      const EventSet& e) {
  return worlds_believing(upper_access(model, i, eps), e);
}

EventSet upper_common_belief(const ProbKripkeModel& model, const Epsilon& eps, const EventSet& e) {
  return worlds_believing(upper_access(model, Player::one, eps) || upper_access(model, Player::two, eps),
                          e);
}

}  // namespace egk
