#include "egk/dominance.hpp"

#include <algorithm>

#include "egk/error.hpp"
#include "egk/simplex.hpp"

namespace egk {
namespace {

using Lp = lp::LinearProgram<Rational>;

void require_member(const Game& game, const Restriction& r, Player i, int s_i) {
  if (!r.contains(i, s_i)) {
    const std::string label = s_i >= 0 && s_i < game.num_strategies(i)
                                  ? game.strategy_label(i, s_i)
                                  : std::to_string(s_i);
    throw InputError("strategy '" + label + "' of player " + to_string(i) +
                     " is not in the restriction");
  }
}

std::vector<int> others(const Restriction& r, Player i, int s_i) {
  std::vector<int> out;
  for (int k : r.of(i)) {
    if (k != s_i) out.push_back(k);
  }
  return out;
}

MixedStrategy scatter(const Game& game, Player owner, const std::vector<int>& support,
                      const RationalVector& x) {
  MixedStrategy mix{owner, RationalVector::Zero(game.num_strategies(owner))};
  for (std::size_t k = 0; k < support.size(); ++k) mix.weights(support[k]) = x(k);
  return mix;
}

}  // namespace

Restriction Restriction::full(const Game& game) {
  Restriction r;
  for (Player p : kPlayers) {
    for (int s = 0; s < game.num_strategies(p); ++s) r.survivors[index(p)].push_back(s);
  }
  return r;
}

bool Restriction::contains(Player p, int s) const {
  const auto& v = survivors[index(p)];
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string to_string(Phase phase) { return phase == Phase::weak ? "weak" : "strict"; }

std::optional<MixedStrategy> strictly_dominated(const Game& game, const Restriction& r, Player i,
                                                int s_i) {
  require_member(game, r, i, s_i);
  const auto candidates = others(r, i, s_i);
  if (candidates.empty()) return std::nullopt;
  const auto& columns = r.of(opponent(i));
  const auto& u = game.utility(i);
  const int k = static_cast<int>(candidates.size());
  const int m = static_cast<int>(columns.size());

  // Variables: dominator weights, then margin split as delta+ - delta-.
  Lp prog;
  prog.a = RationalMatrix::Zero(m + 1, k + 2);
  prog.b = RationalVector::Zero(m + 1);
  prog.c = RationalVector::Zero(k + 2);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < k; ++d) prog.a(c, d) = u(candidates[d], columns[c]);
    prog.a(c, k) = -1;
    prog.a(c, k + 1) = 1;
    prog.b(c) = u(s_i, columns[c]);
    prog.sense.push_back(lp::Sense::greater_equal);
  }
  prog.a.row(m).head(k).setOnes();
  prog.b(m) = 1;
  prog.sense.push_back(lp::Sense::equal);
  prog.c(k) = 1;
  prog.c(k + 1) = -1;

  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal || sol.objective <= 0) return std::nullopt;
  return scatter(game, i, candidates, sol.x.head(k));
}

std::optional<MixedStrategy> weakly_dominated(const Game& game, const Restriction& r, Player i,
                                              int s_i) {
  require_member(game, r, i, s_i);
  const auto candidates = others(r, i, s_i);
  if (candidates.empty()) return std::nullopt;
  const auto& columns = r.of(opponent(i));
  const auto& u = game.utility(i);
  const int k = static_cast<int>(candidates.size());
  const int m = static_cast<int>(columns.size());

  // Variables: dominator weights, then one slack per opponent strategy.
  Lp prog;
  prog.a = RationalMatrix::Zero(m + 1, k + m);
  prog.b = RationalVector::Zero(m + 1);
  prog.c = RationalVector::Zero(k + m);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < k; ++d) prog.a(c, d) = u(candidates[d], columns[c]);
    prog.a(c, k + c) = -1;
    prog.b(c) = u(s_i, columns[c]);
    prog.sense.push_back(lp::Sense::equal);
  }
  prog.a.row(m).head(k).setOnes();
  prog.b(m) = 1;
  prog.sense.push_back(lp::Sense::equal);
  prog.c.tail(m).setOnes();

  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal || sol.objective <= 0) return std::nullopt;
  return scatter(game, i, candidates, sol.x.head(k));
}

std::optional<MixedStrategy> justifying_belief(const Game& game, const Restriction& r, Player i,
                                               int s_i) {
  require_member(game, r, i, s_i);
  const auto rivals = others(r, i, s_i);
  const auto& columns = r.of(opponent(i));
  const auto& u = game.utility(i);
  const int k = static_cast<int>(rivals.size());
  const int m = static_cast<int>(columns.size());

  Lp prog;
  prog.a = RationalMatrix::Zero(k + 1, m);
  prog.b = RationalVector::Zero(k + 1);
  prog.c = RationalVector::Zero(m);
  for (int d = 0; d < k; ++d) {
    for (int c = 0; c < m; ++c) prog.a(d, c) = u(s_i, columns[c]) - u(rivals[d], columns[c]);
    prog.sense.push_back(lp::Sense::greater_equal);
  }
  prog.a.row(k).setOnes();
  prog.b(k) = 1;
  prog.sense.push_back(lp::Sense::equal);

  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal) return std::nullopt;
  return scatter(game, opponent(i), columns, sol.x);
}

std::optional<MixedStrategy> cautious_justifying_belief(const Game& game, const Restriction& r,
                                                        Player i, int s_i) {
  require_member(game, r, i, s_i);
  const auto rivals = others(r, i, s_i);
  const auto& columns = r.of(opponent(i));
  const auto& u = game.utility(i);
  const int k = static_cast<int>(rivals.size());
  const int m = static_cast<int>(columns.size());

  // Variables: belief weights, then the smallest weight delta (maximised).
  Lp prog;
  prog.a = RationalMatrix::Zero(k + m + 1, m + 1);
  prog.b = RationalVector::Zero(k + m + 1);
  prog.c = RationalVector::Zero(m + 1);
  for (int d = 0; d < k; ++d) {
    for (int c = 0; c < m; ++c) prog.a(d, c) = u(s_i, columns[c]) - u(rivals[d], columns[c]);
    prog.sense.push_back(lp::Sense::greater_equal);
  }
  for (int c = 0; c < m; ++c) {
    prog.a(k + c, c) = 1;
    prog.a(k + c, m) = -1;
    prog.sense.push_back(lp::Sense::greater_equal);
  }
  prog.a.row(k + m).head(m).setOnes();
  prog.b(k + m) = 1;
  prog.sense.push_back(lp::Sense::equal);
  prog.c(m) = 1;

  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal || sol.objective <= 0) return std::nullopt;
  return scatter(game, opponent(i), columns, sol.x.head(m));
}

bool verifies_strict_dominance(const Game& game, const Restriction& r, Player i, int s_i,
                               const MixedStrategy& dominator) {
  const RationalVector gap =
      game.utility(i).transpose() * dominator.weights - game.utility(i).row(s_i).transpose();
  if (dominator.weights(s_i) != 0) return false;
  return std::all_of(r.of(opponent(i)).begin(), r.of(opponent(i)).end(),
                     [&](int c) { return gap(c) > 0; });
}

bool verifies_weak_dominance(const Game& game, const Restriction& r, Player i, int s_i,
                             const MixedStrategy& dominator) {
  const RationalVector gap =
      game.utility(i).transpose() * dominator.weights - game.utility(i).row(s_i).transpose();
  if (dominator.weights(s_i) != 0) return false;
  bool strict = false;
  for (int c : r.of(opponent(i))) {
    if (gap(c) < 0) return false;
    strict = strict || gap(c) > 0;
  }
  return strict;
}

Restriction iterate_strict_dominance(const Game& game, Restriction current,
                                     EliminationTrace& trace) {
  for (;;) {
    EliminationRound round{Phase::strict, {}};
    for (Player p : kPlayers) {
      for (int s : current.of(p)) {
        if (auto dom = strictly_dominated(game, current, p, s)) {
          round.eliminated.push_back({p, s, std::move(*dom)});
        }
      }
    }
    if (round.eliminated.empty()) return current;
    for (const auto& e : round.eliminated) {
      auto& v = current.survivors[index(e.player)];
      v.erase(std::find(v.begin(), v.end(), e.strategy));
    }
    trace.rounds.push_back(std::move(round));
  }
}

EliminationResult dekel_fudenberg(const Game& game) {
  EliminationResult out;
  const Restriction full = Restriction::full(game);
  out.survivors = full;
  EliminationRound first{Phase::weak, {}};
  for (Player p : kPlayers) {
    for (int s : full.of(p)) {
      if (auto dom = weakly_dominated(game, full, p, s)) {
        first.eliminated.push_back({p, s, std::move(*dom)});
      }
    }
  }
  for (const auto& e : first.eliminated) {
    auto& v = out.survivors.survivors[index(e.player)];
    v.erase(std::find(v.begin(), v.end(), e.strategy));
  }
  if (!first.eliminated.empty()) out.trace.rounds.push_back(std::move(first));
  out.survivors = iterate_strict_dominance(game, std::move(out.survivors), out.trace);
  return out;
}

EliminationResult iesds(const Game& game) {
  EliminationResult out;
  out.survivors = iterate_strict_dominance(game, Restriction::full(game), out.trace);
  return out;
}

}  // namespace egk
