#include "egk/kripke.hpp"

#include <algorithm>

#include "egk/error.hpp"

namespace egk {

EventSet make_event(int n, std::initializer_list<int> list) {
  return make_event(n, std::vector<int>(list));
}

EventSet make_event(int n, const std::vector<int>& list) {
  EventSet e = empty_event(n);
  for (int w : list) {
    if (w < 0 || w >= n) throw InputError("event member out of range");
    e(w) = true;
  }
  return e;
}

std::vector<int> members(const EventSet& e) {
  std::vector<int> out;
  for (Eigen::Index w = 0; w < e.size(); ++w) {
    if (e(w)) out.push_back(static_cast<int>(w));
  }
  return out;
}

std::optional<int> StandardKripkeModel::find_world(std::string_view label) const {
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    if (worlds[w] == label) return static_cast<int>(w);
  }
  return std::nullopt;
}

int StandardKripkeModel::world_index(std::string_view label) const {
  if (auto w = find_world(label)) return *w;
  throw InputError("unknown world '" + std::string(label) + "'");
}

std::vector<int> StandardKripkeModel::accessible(Player p, int w) const {
  return members(relation(p).row(w).transpose());
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::world_count: return "world-count";
    case Rule::sigma_range: return "sigma-range";
    case Rule::seriality: return "seriality";
    case Rule::transitivity: return "transitivity";
    case Rule::euclideanness: return "euclideanness";
    case Rule::sigma_constancy: return "sigma-constancy";
    case Rule::probability_measure: return "probability-measure";
    case Rule::support: return "support";
    case Rule::p_constancy: return "p-constancy";
    case Rule::lambda_measure: return "lambda-measure";
    case Rule::lambda_support: return "lambda-support";
    case Rule::lambda_injectivity: return "lambda-injectivity";
    case Rule::lambda_constancy: return "lambda-constancy";
    case Rule::caution: return "caution";
    case Rule::trembling: return "trembling";
    case Rule::disjoint_supports: return "disjoint-supports";
    case Rule::surjection: return "surjection";
  }
  return "?";
}

std::string describe(const Violation& v, const StandardKripkeModel& model) {
  std::string out = to_string(v.rule) + " (player " + to_string(v.player) + ")";
  if (!v.worlds.empty()) {
    out += " at";
    for (int w : v.worlds) {
      out += " ";
      out += w >= 0 && w < model.num_worlds() ? model.worlds[static_cast<std::size_t>(w)]
                                              : std::to_string(w);
    }
  }
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

std::vector<Violation> validate_standard(const StandardKripkeModel& model) {
  std::vector<Violation> out;
  const int n = model.num_worlds();
  if (n == 0) {
    out.push_back({Rule::world_count, Player::one, {}, "the model has no worlds"});
    return out;
  }
  for (Player i : kPlayers) {
    const auto& r = model.relation(i);
    const auto& sigma = model.sigma[index(i)];
    if (r.rows() != n || r.cols() != n || static_cast<int>(sigma.size()) != n) {
      out.push_back({Rule::world_count, i, {}, "relation or assignment size differs from |W|"});
      continue;
    }
    for (int w = 0; w < n; ++w) {
      if (sigma[w] < 0 || sigma[w] >= model.game.num_strategies(i)) {
        out.push_back({Rule::sigma_range, i, {w}, "assigned strategy is not in S_i"});
      }
    }
    for (int w = 0; w < n; ++w) {
      if (!r.row(w).any()) out.push_back({Rule::seriality, i, {w}, "R_i(w) is empty"});
    }
    for (int w = 0; w < n; ++w) {
      for (int v = 0; v < n; ++v) {
        if (!r(w, v)) continue;
        for (int u = 0; u < n; ++u) {
          if (r(v, u) && !r(w, u)) {
            out.push_back({Rule::transitivity, i, {w, v, u}, "wRv and vRu but not wRu"});
            break;
          }
        }
        for (int u = 0; u < n; ++u) {
          if (r(w, u) && !r(v, u)) {
            out.push_back({Rule::euclideanness, i, {w, v, u}, "wRv and wRu but not vRu"});
            break;
          }
        }
        if (sigma[v] != sigma[w]) {
          out.push_back({Rule::sigma_constancy, i, {w, v}, "σ_i differs on an accessible world"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_probabilistic(const ProbKripkeModel& model) {
  auto out = validate_standard(model.base);
  const int n = model.base.num_worlds();
  for (Player i : kPlayers) {
    const auto& p = model.measure(i);
    if (p.rows() != n || p.cols() != n) {
      out.push_back({Rule::world_count, i, {}, "p_i has the wrong shape"});
      continue;
    }
    const auto& r = model.base.relation(i);
    for (int w = 0; w < n; ++w) {
      if ((p.row(w).array() < Rational(0)).any() || p.row(w).sum() != 1) {
        out.push_back({Rule::probability_measure, i, {w}, "p_i(w) is not a probability measure"});
      }
      for (int v = 0; v < n; ++v) {
        if (p(w, v) != 0 && !r(w, v)) {
          out.push_back({Rule::support, i, {w, v}, "p_i(w) weights an inaccessible world"});
        }
      }
      for (int v = 0; v < n; ++v) {
        if (r(w, v) && p.row(v) != p.row(w)) {
          out.push_back({Rule::p_constancy, i, {w, v}, "p_i differs on an accessible world"});
        }
      }
    }
  }
  return out;
}

EventSet belief(const StandardKripkeModel& model, Player i, const EventSet& e) {
  return worlds_believing(model.relation(i), e);
}

EventSet common_belief(const StandardKripkeModel& model, const EventSet& e) {
  return worlds_believing(model.relation(Player::one) || model.relation(Player::two), e);
}

RationalMatrix strategy_indicator(const StandardKripkeModel& model, Player p) {
  RationalMatrix m = RationalMatrix::Zero(model.num_worlds(), model.game.num_strategies(p));
  for (int w = 0; w < model.num_worlds(); ++w) m(w, model.strategy_at(p, w)) = 1;
  return m;
}

RationalVector induced_opponent_mixture(const ProbKripkeModel& model, Player i, int w) {
  return strategy_indicator(model.base, opponent(i)).transpose() *
         model.measure(i).row(w).transpose();
}

RationalitySets rat(const ProbKripkeModel& model) {
  const int n = model.base.num_worlds();
  RationalitySets out;
  for (Player i : kPlayers) {
    const RationalMatrix mixtures =
        model.measure(i) * strategy_indicator(model.base, opponent(i));  // W x |S_j|
    const RationalMatrix utilities = mixtures * model.base.game.utility(i).transpose();
    EventSet& r = out.player[index(i)];
    r.resize(n);
    for (int w = 0; w < n; ++w) {
      r(w) = utilities(w, model.base.strategy_at(i, w)) == utilities.row(w).maxCoeff();
    }
  }
  out.all = out.player[0] && out.player[1];
  return out;
}

IedsCheckReport check_theorem_1_1(const ProbKripkeModel& model) {
  IedsCheckReport report;
  report.cb_rat = common_belief(model.base, rat(model).all);
  report.ieds = iesds(model.base.game).survivors;
  for (int w : members(report.cb_rat)) {
    if (!report.ieds.contains_profile(model.base.strategy_at(Player::one, w),
                                      model.base.strategy_at(Player::two, w))) {
      report.failures.push_back(w);
    }
  }
  report.holds = report.failures.empty();
  return report;
}

std::pair<ProbKripkeModel, int> construct_ieds_witness(const Game& game,
                                                       std::array<int, 2> profile) {
  const Restriction surv = iesds(game).survivors;
  if (!surv.contains_profile(profile[0], profile[1])) {
    throw InputError("profile (" + game.strategy_label(Player::one, profile[0]) + "," +
                     game.strategy_label(Player::two, profile[1]) + ") does not survive IESDS");
  }
  // One justifying belief per surviving strategy of each player.
  std::array<std::vector<MixedStrategy>, 2> beliefs;
  for (Player i : kPlayers) {
    for (int s : surv.of(i)) {
      auto q = justifying_belief(game, surv, i, s);
      if (!q) throw std::logic_error("IESDS survivor without a justifying belief");
      beliefs[index(i)].push_back(std::move(*q));
    }
  }

  const auto& s1 = surv.of(Player::one);
  const auto& s2 = surv.of(Player::two);
  const int n1 = static_cast<int>(s1.size());
  const int n2 = static_cast<int>(s2.size());
  const int n = n1 * n2;
  auto world_of = [n2](int a, int b) { return a * n2 + b; };

  ProbKripkeModel model{{game, {}, {}, {}}, {}};
  auto& base = model.base;
  for (Player i : kPlayers) {
    base.access[index(i)] = AccessRelation::Constant(n, n, false);
    base.sigma[index(i)].resize(static_cast<std::size_t>(n));
    model.p[index(i)] = RationalMatrix::Zero(n, n);
  }
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      const int w = world_of(a, b);
      base.worlds.push_back("w" + std::to_string(w + 1));
      base.sigma[0][static_cast<std::size_t>(w)] = s1[static_cast<std::size_t>(a)];
      base.sigma[1][static_cast<std::size_t>(w)] = s2[static_cast<std::size_t>(b)];
      const auto& q1 = beliefs[0][static_cast<std::size_t>(a)];
      for (int b2 = 0; b2 < n2; ++b2) {
        const Rational& weight = q1.weights(s2[static_cast<std::size_t>(b2)]);
        if (weight > 0) {
          base.access[0](w, world_of(a, b2)) = true;
          model.p[0](w, world_of(a, b2)) = weight;
        }
      }
      const auto& q2 = beliefs[1][static_cast<std::size_t>(b)];
      for (int a2 = 0; a2 < n1; ++a2) {
        const Rational& weight = q2.weights(s1[static_cast<std::size_t>(a2)]);
        if (weight > 0) {
          base.access[1](w, world_of(a2, b)) = true;
          model.p[1](w, world_of(a2, b)) = weight;
        }
      }
    }
  }
  const auto pos1 = std::find(s1.begin(), s1.end(), profile[0]) - s1.begin();
  const auto pos2 = std::find(s2.begin(), s2.end(), profile[1]) - s2.begin();
  return {std::move(model), world_of(static_cast<int>(pos1), static_cast<int>(pos2))};
}

}  // namespace egk
