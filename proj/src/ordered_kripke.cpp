#include "egk/ordered_kripke.hpp"

#include <algorithm>
#include <vector>

#include "egk/error.hpp"

namespace egk {
namespace {

bool level_shape_ok(const OrderedKripkeModel& model, Player i) {
  const int n = model.base.num_worlds();
  const auto& lam = model.lambda[index(i)];
  if (static_cast<int>(lam.size()) != n) return false;
  for (const auto& m : lam) {
    if (m.rows() < 1 || m.cols() != n) return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> validate_ordered(const OrderedKripkeModel& model) {
  auto out = validate_standard(model.base);
  const int n = model.base.num_worlds();
  for (Player i : kPlayers) {
    if (!level_shape_ok(model, i)) {
      out.push_back({Rule::world_count, i, {}, "λ_i needs one nonempty K x |W| block per world"});
      continue;
    }
    const auto& r = model.base.relation(i);
    for (int w = 0; w < n; ++w) {
      const auto& lam = model.levels(i, w);
      for (int k = 0; k < lam.rows(); ++k) {
        const std::string level = "level " + std::to_string(k + 1);
        if ((lam.row(k).array() < Rational(0)).any() || lam.row(k).sum() != 1) {
          out.push_back({Rule::lambda_measure, i, {w}, level + " is not a probability measure"});
        }
        for (int v = 0; v < n; ++v) {
          if (lam(k, v) != 0 && !r(w, v)) {
            out.push_back({Rule::lambda_support, i, {w, v}, level + " weights an inaccessible world"});
          }
        }
        for (int k2 = k + 1; k2 < lam.rows(); ++k2) {
          if (lam.row(k) == lam.row(k2)) {
            out.push_back({Rule::lambda_injectivity, i, {w},
                           "levels " + std::to_string(k + 1) + " and " + std::to_string(k2 + 1) +
                               " coincide"});
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_lambda_constancy(const OrderedKripkeModel& model) {
  std::vector<Violation> out;
  const int n = model.base.num_worlds();
  for (Player i : kPlayers) {
    for (int w = 0; w < n; ++w) {
      const auto& lam = model.levels(i, w);
      for (int v : model.base.accessible(i, w)) {
        const auto& other = model.levels(i, v);
        if (other.rows() != lam.rows() || other != lam) {
          out.push_back({Rule::lambda_constancy, i, {w, v}, "λ_i differs on an accessible world"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_caution(const OrderedKripkeModel& model) {
  std::vector<Violation> out;
  const int n = model.base.num_worlds();
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    for (int w = 0; w < n; ++w) {
      std::vector<bool> seen(static_cast<std::size_t>(model.base.game.num_strategies(j)), false);
      const auto& lam = model.levels(i, w);
      for (int k = 0; k < lam.rows(); ++k) {
        for (int v = 0; v < n; ++v) {
          if (lam(k, v) > 0) seen[static_cast<std::size_t>(model.base.strategy_at(j, v))] = true;
        }
      }
      for (std::size_t s = 0; s < seen.size(); ++s) {
        if (!seen[s]) {
          out.push_back({Rule::caution, i, {w},
                         "no level weights opponent strategy " +
                             model.base.game.strategy_label(j, static_cast<int>(s))});
        }
      }
    }
  }
  return out;
}

RationalMatrix level_utilities(const OrderedKripkeModel& model, Player i, int w) {
  const RationalMatrix mixtures =
      model.levels(i, w) * strategy_indicator(model.base, opponent(i));
  return mixtures * model.base.game.utility(i).transpose();
}

LexOrder lex_prefers(const OrderedKripkeModel& model, Player i, int w, int s, int t) {
  const int m = model.base.game.num_strategies(i);
  if (s < 0 || s >= m || t < 0 || t >= m) throw InputError("strategy index out of range");
  const RationalMatrix u = level_utilities(model, i, w);
  for (int k = 0; k < u.rows(); ++k) {
    if (u(k, s) > u(k, t)) return LexOrder::greater;
    if (u(k, s) < u(k, t)) return LexOrder::less;
  }
  return LexOrder::equal;
}

std::vector<int> lex_optimal(const OrderedKripkeModel& model, Player i, int w) {
  const RationalMatrix u = level_utilities(model, i, w);
  std::vector<int> best;
  for (int s = 0; s < u.cols(); ++s) best.push_back(s);
  for (int k = 0; k < u.rows() && best.size() > 1; ++k) {
    Rational top = u(k, best.front());
    for (int s : best) top = u(k, s) > top ? u(k, s) : top;
    std::vector<int> keep;
    for (int s : best) {
      if (u(k, s) == top) keep.push_back(s);
    }
    best = std::move(keep);
  }
  return best;
}

RationalitySets lrat(const OrderedKripkeModel& model) {
  const int n = model.base.num_worlds();
  RationalitySets out;
  for (Player i : kPlayers) {
    EventSet& r = out.player[index(i)];
    r.resize(n);
    for (int w = 0; w < n; ++w) {
      const auto best = lex_optimal(model, i, w);
      r(w) = std::find(best.begin(), best.end(), model.base.strategy_at(i, w)) != best.end();
    }
  }
  out.all = out.player[0] && out.player[1];
  return out;
}

AccessRelation level1_access(const OrderedKripkeModel& model, Player i) {
  const int n = model.base.num_worlds();
  AccessRelation a(n, n);
  for (int w = 0; w < n; ++w) {
    a.row(w) = model.levels(i, w).row(0).array() > Rational(0);
  }
  return a;
}

EventSet level1_belief(const OrderedKripkeModel& model, Player i, const EventSet& e) {
  return worlds_believing(level1_access(model, i), e);
}

EventSet common_level1_belief(const OrderedKripkeModel& model, const EventSet& e) {
  return worlds_believing(level1_access(model, Player::one) || level1_access(model, Player::two),
                          e);
}

StructuralReport check_structural_conditions(const OrderedKripkeModel& model) {
  StructuralReport report;
  const int n = model.base.num_worlds();
  for (Player i : kPlayers) {
    const auto& r = model.base.relation(i);
    for (int w = 0; w < n; ++w) {
      const auto& lam = model.levels(i, w);
      for (int v = 0; v < n; ++v) {
        int hits = 0;
        for (int k = 0; k < lam.rows(); ++k) hits += lam(k, v) > 0 ? 1 : 0;
        if (hits > 1) {
          report.disjoint_supports = false;
          report.violations.push_back(
              {Rule::disjoint_supports, i, {w, v}, "world is in the support of several levels"});
        }
        if (hits == 0 && r(w, v)) {
          report.surjection = false;
          report.violations.push_back(
              {Rule::surjection, i, {w, v}, "accessible world gets no weight at any level"});
        }
      }
    }
  }
  return report;
}

}  // namespace egk
