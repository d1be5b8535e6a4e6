#include "egk/game.hpp"

#include <set>

#include "egk/error.hpp"

namespace egk {

std::string to_string(Player p) { return p == Player::one ? "1" : "2"; }

Player parse_player(std::string_view text) {
  if (text == "1") return Player::one;
  if (text == "2") return Player::two;
  throw InputError("unknown player '" + std::string(text) + "' (expected 1 or 2)");
}

Game::Game(std::array<std::string, 2> player_names,
           std::array<std::vector<std::string>, 2> strategies,
           std::array<RationalMatrix, 2> payoffs)
    : player_names_(std::move(player_names)),
      strategies_(std::move(strategies)),
      payoffs_(std::move(payoffs)) {
  for (Player p : kPlayers) {
    const auto& labels = strategies_[index(p)];
    if (labels.empty()) {
      throw InputError("player " + to_string(p) + " has no strategies");
    }
    std::set<std::string_view> seen;
    for (const auto& label : labels) {
      if (!seen.insert(label).second) {
        throw InputError("duplicate strategy label '" + label + "' for player " + to_string(p));
      }
    }
  }
  const auto rows = static_cast<Eigen::Index>(strategies_[0].size());
  const auto cols = static_cast<Eigen::Index>(strategies_[1].size());
  for (const auto& u : payoffs_) {
    if (u.rows() != rows || u.cols() != cols) {
      throw InputError("payoff matrix shape does not match strategy sets");
    }
  }
  own_view_[0] = payoffs_[0];
  own_view_[1] = payoffs_[1].transpose();
}

const std::string& Game::strategy_label(Player p, int s) const {
  return strategies_[index(p)].at(static_cast<std::size_t>(s));
}

std::optional<int> Game::find_strategy(Player p, std::string_view label) const {
  const auto& labels = strategies_[index(p)];
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return static_cast<int>(k);
  }
  return std::nullopt;
}

int Game::strategy_index(Player p, std::string_view label) const {
  if (auto s = find_strategy(p, label)) return *s;
  throw InputError("unknown strategy '" + std::string(label) + "' for player " + to_string(p));
}

bool operator==(const Game& a, const Game& b) {
  return a.player_names_ == b.player_names_ && a.strategies_ == b.strategies_ &&
         a.payoffs_ == b.payoffs_;
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> out;
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    if (weights(k) > 0) out.push_back(static_cast<int>(k));
  }
  return out;
}

MixedStrategy point_mass(const Game& game, Player owner, int strategy) {
  MixedStrategy mix{owner, RationalVector::Zero(game.num_strategies(owner))};
  mix.weights(strategy) = 1;
  return mix;
}

MixedStrategy make_mixed(const Game& game, Player owner,
                         const std::map<std::string, Rational>& weights) {
  MixedStrategy mix{owner, RationalVector::Zero(game.num_strategies(owner))};
  for (const auto& [label, w] : weights) mix.weights(game.strategy_index(owner, label)) = w;
  validate(game, mix);
  return mix;
}

void validate(const Game& game, const MixedStrategy& mix) {
  if (mix.weights.size() != game.num_strategies(mix.owner)) {
    throw InputError("mixed strategy has wrong length for player " + to_string(mix.owner));
  }
  if ((mix.weights.array() < Rational(0)).any()) {
    throw InputError("mixed strategy has a negative weight");
  }
  if (mix.weights.sum() != 1) {
    throw InputError("mixed strategy weights sum to " + to_string(mix.weights.sum()));
  }
}

Rational expected_utility(const Game& game, Player i, int s_i, const MixedStrategy& mix_j) {
  if (mix_j.owner != opponent(i)) {
    throw InputError("belief must be over the opponent's strategies");
  }
  validate(game, mix_j);
  if (s_i < 0 || s_i >= game.num_strategies(i)) {
    throw InputError("strategy index out of range for player " + to_string(i));
  }
  return game.utility(i).row(s_i).dot(mix_j.weights);
}

Rational expected_utility(const Game& game, Player i, std::string_view s_i,
                          const MixedStrategy& mix_j) {
  return expected_utility(game, i, game.strategy_index(i, s_i), mix_j);
}

std::vector<Rational> lex_utility_vector(const Game& game, Player i, int s_i,
                                         std::span<const MixedStrategy> beliefs) {
  if (beliefs.empty()) throw InputError("lexicographic belief must have at least one level");
  std::vector<Rational> out;
  out.reserve(beliefs.size());
  for (const auto& level : beliefs) out.push_back(expected_utility(game, i, s_i, level));
  return out;
}

LexOrder lex_compare(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) {
    throw InputError("lexicographic vectors differ in length (" + std::to_string(u.size()) +
                     " vs " + std::to_string(v.size()) + ")");
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return LexOrder::greater;
    if (u[k] < v[k]) return LexOrder::less;
  }
  return LexOrder::equal;
}

std::string to_string(LexOrder order) {
  switch (order) {
    case LexOrder::less: return "less";
    case LexOrder::equal: return "equal";
    case LexOrder::greater: return "greater";
  }
  return "?";
}

}  // namespace egk
