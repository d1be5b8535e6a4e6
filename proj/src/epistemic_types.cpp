#include "egk/epistemic_types.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "egk/dominance.hpp"
#include "egk/error.hpp"

namespace egk {
namespace {

int find_label(const std::vector<std::string>& labels, std::string_view label, Player i) {
  for (std::size_t t = 0; t < labels.size(); ++t) {
    if (labels[t] == label) return static_cast<int>(t);
  }
  throw InputError("unknown type '" + std::string(label) + "' of player " + to_string(i));
}

void validate_labels(const std::array<std::vector<std::string>, 2>& types) {
  for (Player i : kPlayers) {
    const auto& labels = types[index(i)];
    if (labels.empty()) throw InputError("player " + to_string(i) + " has no types");
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw InputError("empty type label for player " + to_string(i));
      if (!seen.insert(l).second) throw InputError("duplicate type label '" + l + "'");
    }
  }
}

void validate_distribution(const PairDistribution& d, int rows, int cols, const std::string& where) {
  if (d.rows() != rows || d.cols() != cols) throw InputError(where + ": wrong shape");
  if ((d.array() < Rational(0)).any()) throw InputError(where + ": negative weight");
  if (d.sum() != 1) throw InputError(where + ": weights do not sum to 1");
}

std::vector<int> positive_columns(const PairDistribution& d) {
  std::vector<int> out;
  for (int t = 0; t < d.cols(); ++t) {
    if ((d.col(t).array() > Rational(0)).any()) out.push_back(t);
  }
  return out;
}

/// Strategies maximising lexicographically over the rows of `u` (levels x |S_i|).
std::vector<int> lex_argmax(const RationalMatrix& u) {
  std::vector<int> best;
  for (int s = 0; s < u.cols(); ++s) best.push_back(s);
  for (int k = 0; k < u.rows() && best.size() > 1; ++k) {
    Rational top = u(k, best.front());
    for (int s : best) {
      if (u(k, s) > top) top = u(k, s);
    }
    std::erase_if(best, [&](int s) { return u(k, s) != top; });
  }
  return best;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

template <typename Model>
TypeSets full_belief_fixed_point(const Model& model, const TypeProperty& p, int* rounds) {
  std::array<std::vector<bool>, 2> alive;
  for (Player i : kPlayers) {
    alive[index(i)].resize(static_cast<std::size_t>(model.num_types(i)));
    for (int t = 0; t < model.num_types(i); ++t) alive[index(i)][static_cast<std::size_t>(t)] = p.at(i, t);
  }
  int count = 0;
  for (bool changed = true; changed;) {
    changed = false;
    auto next = alive;
    for (Player i : kPlayers) {
      for (int t = 0; t < model.num_types(i); ++t) {
        if (!alive[index(i)][static_cast<std::size_t>(t)]) continue;
        for (int u : deems_possible(model, i, t)) {
          if (!alive[index(opponent(i))][static_cast<std::size_t>(u)]) {
            next[index(i)][static_cast<std::size_t>(t)] = false;
            changed = true;
            break;
          }
        }
      }
    }
    if (changed) ++count;
    alive = std::move(next);
  }
  if (rounds != nullptr) *rounds = count;
  TypeSets out;
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) {
      if (alive[index(i)][static_cast<std::size_t>(t)]) out[index(i)].push_back(t);
    }
  }
  return out;
}

template <typename Model>
std::array<std::vector<int>, 2> optimal_union(const Model& model, const TypeSets& types) {
  std::array<std::vector<int>, 2> out;
  for (Player i : kPlayers) {
    std::set<int> s;
    for (int t : types[index(i)]) {
      for (int x : optimal_strategies(model, i, t)) s.insert(x);
    }
    out[index(i)].assign(s.begin(), s.end());
  }
  return out;
}

/// Drops each level equal to its predecessor; throws if a level repeats a
/// non-adjacent earlier one.
std::vector<PairDistribution> merged_levels(const LexEpistemicModel& model, Player i, int t) {
  std::vector<PairDistribution> out;
  for (const auto& level : model.belief(i, t)) {
    if (!out.empty() && out.back() == level) continue;
    for (const auto& earlier : out) {
      if (earlier == level) {
        throw PreconditionError("type " + model.types[index(i)][static_cast<std::size_t>(t)] +
                                " of player " + to_string(i) +
                                " repeats a non-adjacent belief level");
      }
    }
    out.push_back(level);
  }
  return out;
}

}  // namespace

int LexEpistemicModel::type_index(Player i, std::string_view label) const {
  return find_label(types[index(i)], label, i);
}

int ProbEpistemicModel::type_index(Player i, std::string_view label) const {
  return find_label(types[index(i)], label, i);
}

void validate(const LexEpistemicModel& model) {
  validate_labels(model.types);
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    if (static_cast<int>(model.beliefs[index(i)].size()) != model.num_types(i)) {
      throw InputError("player " + to_string(i) + ": one belief sequence per type is required");
    }
    for (int t = 0; t < model.num_types(i); ++t) {
      const std::string where = "belief of type " + model.types[index(i)][static_cast<std::size_t>(t)];
      if (model.belief(i, t).empty()) throw InputError(where + ": no levels");
      for (const auto& level : model.belief(i, t)) {
        validate_distribution(level, model.game.num_strategies(j), model.num_types(j), where);
      }
    }
  }
}

void validate(const ProbEpistemicModel& model) {
  validate_labels(model.types);
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    if (static_cast<int>(model.beliefs[index(i)].size()) != model.num_types(i)) {
      throw InputError("player " + to_string(i) + ": one belief per type is required");
    }
    for (int t = 0; t < model.num_types(i); ++t) {
      validate_distribution(model.belief(i, t), model.game.num_strategies(j), model.num_types(j),
                            "belief of type " + model.types[index(i)][static_cast<std::size_t>(t)]);
    }
  }
}

std::vector<int> deems_possible(const LexEpistemicModel& model, Player i, int t) {
  std::set<int> s;
  for (const auto& level : model.belief(i, t)) {
    for (int u : positive_columns(level)) s.insert(u);
  }
  return {s.begin(), s.end()};
}

std::vector<int> deems_possible(const ProbEpistemicModel& model, Player i, int t) {
  return positive_columns(model.belief(i, t));
}

bool type_caution(const LexEpistemicModel& model, Player i, int t) {
  const auto deemed = deems_possible(model, i, t);
  const int sj = model.game.num_strategies(opponent(i));
  for (int u : deemed) {
    for (int s = 0; s < sj; ++s) {
      bool hit = false;
      for (const auto& level : model.belief(i, t)) hit = hit || level(s, u) > 0;
      if (!hit) return false;
    }
  }
  return true;
}

bool type_caution(const ProbEpistemicModel& model, Player i, int t) {
  const auto& b = model.belief(i, t);
  for (int u : deems_possible(model, i, t)) {
    if ((b.col(u).array() <= Rational(0)).any()) return false;
  }
  return true;
}

std::vector<int> optimal_strategies(const LexEpistemicModel& model, Player i, int t) {
  const auto& levels = model.belief(i, t);
  RationalMatrix u(static_cast<Eigen::Index>(levels.size()), model.game.num_strategies(i));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const RationalVector marginal = levels[k].rowwise().sum();
    u.row(static_cast<Eigen::Index>(k)) = utilities_against(model.game, i, marginal).transpose();
  }
  return lex_argmax(u);
}

std::vector<int> optimal_strategies(const ProbEpistemicModel& model, Player i, int t) {
  const RationalVector marginal = model.belief(i, t).rowwise().sum();
  const RationalRowVector u = utilities_against(model.game, i, marginal).transpose();
  return lex_argmax(u);
}

bool primary_belief_in_rationality(const LexEpistemicModel& model, Player i, int t) {
  const auto& primary = model.belief(i, t).front();
  const Player j = opponent(i);
  for (int u = 0; u < primary.cols(); ++u) {
    std::vector<int> best;
    for (int s = 0; s < primary.rows(); ++s) {
      if (primary(s, u) <= 0) continue;
      if (best.empty()) best = optimal_strategies(model, j, u);
      if (!contains(best, s)) return false;
    }
  }
  return true;
}

bool eps_trembling(const ProbEpistemicModel& model, Player i, int t, const Epsilon& eps) {
  const auto& b = model.belief(i, t);
  const Player j = opponent(i);
  for (int u = 0; u < b.cols(); ++u) {
    std::vector<int> best;
    bool computed = false;
    for (int s = 0; s < b.rows(); ++s) {
      if (b(s, u) <= eps.value()) continue;
      if (!computed) {
        best = optimal_strategies(model, j, u);
        computed = true;
      }
      if (!contains(best, s)) return false;
    }
  }
  return true;
}

TypeProperty caution_property(const LexEpistemicModel& model) {
  TypeProperty p{"caution", {}};
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) p.holds[index(i)].push_back(type_caution(model, i, t));
  }
  return p;
}

TypeProperty caution_property(const ProbEpistemicModel& model) {
  TypeProperty p{"caution", {}};
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) p.holds[index(i)].push_back(type_caution(model, i, t));
  }
  return p;
}

TypeProperty primary_rationality_property(const LexEpistemicModel& model) {
  TypeProperty p{"primary_rationality", {}};
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) {
      p.holds[index(i)].push_back(primary_belief_in_rationality(model, i, t));
    }
  }
  return p;
}

TypeProperty eps_trembling_property(const ProbEpistemicModel& model, const Epsilon& eps) {
  TypeProperty p{"eps_trembling(" + to_string(eps.value()) + ")", {}};
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) {
      p.holds[index(i)].push_back(eps_trembling(model, i, t, eps));
    }
  }
  return p;
}

TypeProperty conjunction(const TypeProperty& a, const TypeProperty& b) {
  TypeProperty p{a.name + " & " + b.name, {}};
  for (Player i : kPlayers) {
    const auto& x = a.holds[index(i)];
    const auto& y = b.holds[index(i)];
    if (x.size() != y.size()) throw std::invalid_argument("properties over different type sets");
    for (std::size_t t = 0; t < x.size(); ++t) p.holds[index(i)].push_back(x[t] && y[t]);
  }
  return p;
}

TypeSets common_full_belief(const LexEpistemicModel& model, const TypeProperty& p, int* rounds) {
  return full_belief_fixed_point(model, p, rounds);
}

TypeSets common_full_belief(const ProbEpistemicModel& model, const TypeProperty& p, int* rounds) {
  return full_belief_fixed_point(model, p, rounds);
}

std::array<std::vector<int>, 2> permissible(const LexEpistemicModel& model) {
  const auto p = conjunction(caution_property(model), primary_rationality_property(model));
  return optimal_union(model, common_full_belief(model, p));
}

std::array<std::vector<int>, 2> eps_permissible(const ProbEpistemicModel& model,
                                                const Epsilon& eps) {
  const auto p = conjunction(caution_property(model), eps_trembling_property(model, eps));
  return optimal_union(model, common_full_belief(model, p));
}

int lex_world_index(const LexEpistemicModel& model, std::array<int, 2> types,
                    std::array<int, 2> profile) {
  const int t2 = model.num_types(Player::two);
  const int s1 = model.game.num_strategies(Player::one);
  const int s2 = model.game.num_strategies(Player::two);
  return ((types[0] * t2 + types[1]) * s1 + profile[0]) * s2 + profile[1];
}

OrderedKripkeModel build_ordered_from_lex(const LexEpistemicModel& model) {
  validate(model);
  std::array<std::vector<std::vector<PairDistribution>>, 2> levels;
  for (Player i : kPlayers) {
    for (int t = 0; t < model.num_types(i); ++t) {
      if (!type_caution(model, i, t)) {
        throw PreconditionError("type " + model.types[index(i)][static_cast<std::size_t>(t)] +
                                " of player " + to_string(i) +
                                " is not cautious; only cautious type models can be embedded");
      }
      levels[index(i)].push_back(merged_levels(model, i, t));
    }
  }

  const int nt1 = model.num_types(Player::one);
  const int nt2 = model.num_types(Player::two);
  const int ns1 = model.game.num_strategies(Player::one);
  const int ns2 = model.game.num_strategies(Player::two);
  const int n = nt1 * nt2 * ns1 * ns2;

  OrderedKripkeModel out{{model.game, {}, {}, {}}, {}};
  auto& base = out.base;
  for (Player i : kPlayers) {
    base.access[index(i)] = AccessRelation::Constant(n, n, false);
    base.sigma[index(i)].resize(static_cast<std::size_t>(n));
    out.lambda[index(i)].resize(static_cast<std::size_t>(n));
  }
  for (int w = 0; w < n; ++w) base.worlds.push_back("w" + std::to_string(w + 1));

  for (int a = 0; a < nt1; ++a) {
    for (int b = 0; b < nt2; ++b) {
      for (int x = 0; x < ns1; ++x) {
        for (int y = 0; y < ns2; ++y) {
          const int w = lex_world_index(model, {a, b}, {x, y});
          base.sigma[0][static_cast<std::size_t>(w)] = x;
          base.sigma[1][static_cast<std::size_t>(w)] = y;

          // Player 1 keeps (t_1, s_1) and ranges over (t_2', s_2').
          const auto& l1 = levels[0][static_cast<std::size_t>(a)];
          RationalMatrix lam1 = RationalMatrix::Zero(static_cast<Eigen::Index>(l1.size()), n);
          for (std::size_t k = 0; k < l1.size(); ++k) {
            for (int y2 = 0; y2 < ns2; ++y2) {
              for (int b2 = 0; b2 < nt2; ++b2) {
                if (l1[k](y2, b2) <= 0) continue;
                const int v = lex_world_index(model, {a, b2}, {x, y2});
                lam1(static_cast<Eigen::Index>(k), v) = l1[k](y2, b2);
                base.access[0](w, v) = true;
              }
            }
          }
          out.lambda[0][static_cast<std::size_t>(w)] = std::move(lam1);

          const auto& l2 = levels[1][static_cast<std::size_t>(b)];
          RationalMatrix lam2 = RationalMatrix::Zero(static_cast<Eigen::Index>(l2.size()), n);
          for (std::size_t k = 0; k < l2.size(); ++k) {
            for (int x2 = 0; x2 < ns1; ++x2) {
              for (int a2 = 0; a2 < nt1; ++a2) {
                if (l2[k](x2, a2) <= 0) continue;
                const int v = lex_world_index(model, {a2, b}, {x2, y});
                lam2(static_cast<Eigen::Index>(k), v) = l2[k](x2, a2);
                base.access[1](w, v) = true;
              }
            }
          }
          out.lambda[1][static_cast<std::size_t>(w)] = std::move(lam2);
        }
      }
    }
  }
  return out;
}

ExtractedTypes extract_prob_model(const ProbKripkeModel& model) {
  const auto& base = model.base;
  const int n = base.num_worlds();

  // Classes of equal (R_i(w), p_i(w)), numbered by first occurrence.
  std::array<std::vector<int>, 2> cls;
  std::array<std::vector<int>, 2> rep;
  for (Player i : kPlayers) {
    auto& c = cls[index(i)];
    auto& r = rep[index(i)];
    c.assign(static_cast<std::size_t>(n), -1);
    for (int w = 0; w < n; ++w) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        const int v = r[k];
        if ((base.relation(i).row(w) == base.relation(i).row(v)).all() &&
            model.measure(i).row(w) == model.measure(i).row(v)) {
          c[static_cast<std::size_t>(w)] = static_cast<int>(k);
          break;
        }
      }
      if (c[static_cast<std::size_t>(w)] < 0) {
        c[static_cast<std::size_t>(w)] = static_cast<int>(r.size());
        r.push_back(w);
      }
    }
  }

  // Belief of class k of player i over (s_j, block of j's class).
  auto signature = [&](Player i, int k, const std::vector<int>& block_j, int blocks_j) {
    const Player j = opponent(i);
    RationalMatrix sig = RationalMatrix::Zero(base.game.num_strategies(j), blocks_j);
    const int w = rep[index(i)][static_cast<std::size_t>(k)];
    for (int v = 0; v < n; ++v) {
      const Rational& q = model.measure(i)(w, v);
      if (q == 0) continue;
      sig(base.strategy_at(j, v), block_j[static_cast<std::size_t>(cls[index(j)][static_cast<std::size_t>(v)])]) += q;
    }
    return sig;
  };

  // Coarsest partition of classes with equal belief hierarchies.
  std::array<std::vector<int>, 2> block;
  std::array<int, 2> blocks{1, 1};
  for (Player i : kPlayers) block[index(i)].assign(rep[index(i)].size(), 0);
  for (;;) {
    std::array<std::vector<int>, 2> next;
    std::array<int, 2> next_count{0, 0};
    for (Player i : kPlayers) {
      const Player j = opponent(i);
      std::vector<std::pair<int, RationalMatrix>> keys;
      for (std::size_t k = 0; k < rep[index(i)].size(); ++k) {
        std::pair<int, RationalMatrix> key{block[index(i)][k],
                                           signature(i, static_cast<int>(k), block[index(j)],
                                                     blocks[index(j)])};
        int found = -1;
        for (std::size_t m = 0; m < keys.size(); ++m) {
          if (keys[m].first == key.first && keys[m].second == key.second) {
            found = static_cast<int>(m);
            break;
          }
        }
        if (found < 0) {
          found = static_cast<int>(keys.size());
          keys.push_back(std::move(key));
        }
        next[index(i)].push_back(found);
      }
      next_count[index(i)] = static_cast<int>(keys.size());
    }
    const bool stable = next_count == blocks;
    block = std::move(next);
    blocks = next_count;
    if (stable) break;
  }

  ExtractedTypes out{{base.game, {}, {}}, {}};
  for (Player i : kPlayers) {
    for (int b = 0; b < blocks[index(i)]; ++b) {
      out.model.types[index(i)].push_back("t" + to_string(i) + "_" + std::to_string(b + 1));
    }
    for (int w = 0; w < n; ++w) {
      out.type_of_world[index(i)].push_back(
          block[index(i)][static_cast<std::size_t>(cls[index(i)][static_cast<std::size_t>(w)])]);
    }
  }
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    out.model.beliefs[index(i)].resize(static_cast<std::size_t>(blocks[index(i)]));
    std::vector<bool> done(static_cast<std::size_t>(blocks[index(i)]), false);
    for (std::size_t k = 0; k < rep[index(i)].size(); ++k) {
      const int b = block[index(i)][k];
      if (done[static_cast<std::size_t>(b)]) continue;
      done[static_cast<std::size_t>(b)] = true;
      out.model.beliefs[index(i)][static_cast<std::size_t>(b)] =
          signature(i, static_cast<int>(k), block[index(j)], blocks[index(j)]);
    }
  }
  return out;
}

LexEpistemicModel build_df_lex_model(const Game& game) {
  const Restriction df = dekel_fudenberg(game).survivors;
  const Restriction full = Restriction::full(game);
  LexEpistemicModel out{game, {}, {}};
  // type_of[i][s] = type index of DF survivor s, -1 otherwise.
  std::array<std::vector<int>, 2> type_of;
  for (Player i : kPlayers) {
    type_of[index(i)].assign(static_cast<std::size_t>(game.num_strategies(i)), -1);
    for (int s : df.of(i)) {
      type_of[index(i)][static_cast<std::size_t>(s)] = static_cast<int>(out.types[index(i)].size());
      out.types[index(i)].push_back(to_string(i) + ":" + game.strategy_label(i, s));
    }
  }
  for (Player i : kPlayers) {
    const Player j = opponent(i);
    const int nj = static_cast<int>(df.of(j).size());
    for (int s : df.of(i)) {
      const auto q = justifying_belief(game, df, i, s);
      const auto f = cautious_justifying_belief(game, full, i, s);
      if (!q || !f) throw std::logic_error("DF survivor without a justifying belief");
      PairDistribution primary = PairDistribution::Zero(game.num_strategies(j), nj);
      std::vector<int> deemed;
      for (int sj : df.of(j)) {
        if (q->weights(sj) > 0) {
          const int u = type_of[index(j)][static_cast<std::size_t>(sj)];
          primary(sj, u) = q->weights(sj);
          deemed.push_back(u);
        }
      }
      PairDistribution secondary = PairDistribution::Zero(game.num_strategies(j), nj);
      const Rational share(1, static_cast<long>(deemed.size()));
      for (int sj = 0; sj < game.num_strategies(j); ++sj) {
        for (int u : deemed) secondary(sj, u) = f->weights(sj) * share;
      }
      std::vector<PairDistribution> levels{primary};
      if (secondary != primary) levels.push_back(secondary);
      out.beliefs[index(i)].push_back(std::move(levels));
    }
  }
  return out;
}

}  // namespace egk
