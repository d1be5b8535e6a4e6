#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egk/rational.hpp"

namespace egk {

enum class Player : std::uint8_t { one = 0, two = 1 };

inline constexpr std::array<Player, 2> kPlayers{Player::one, Player::two};

constexpr Player opponent(Player p) { return p == Player::one ? Player::two : Player::one; }
constexpr std::size_t index(Player p) { return static_cast<std::size_t>(p); }
/// Players render 1-based, as in the file formats ("1", "2").
std::string to_string(Player p);
/// Accepts "1" or "2".
Player parse_player(std::string_view text);

/// A finite two-player strategic-form game with exact payoffs.
///
/// Strategy labels keep their file order; every enumeration in the library
/// breaks ties by this order.
class Game {
 public:
  /// `payoffs[i]` is the |S_1| x |S_2| matrix of u_i(s_1, s_2).
  Game(std::array<std::string, 2> player_names,
       std::array<std::vector<std::string>, 2> strategies,
       std::array<RationalMatrix, 2> payoffs);

  const std::string& player_name(Player p) const { return player_names_[index(p)]; }
  const std::vector<std::string>& strategies(Player p) const { return strategies_[index(p)]; }
  int num_strategies(Player p) const { return static_cast<int>(strategies_[index(p)].size()); }
  const std::string& strategy_label(Player p, int s) const;

  std::optional<int> find_strategy(Player p, std::string_view label) const;
  /// Throws InputError naming the label when it is not a strategy of `p`.
  int strategy_index(Player p, std::string_view label) const;

  /// u_i oriented as own strategies (rows) x opponent strategies (columns).
  const RationalMatrix& utility(Player p) const { return own_view_[index(p)]; }
  /// u_i(s_1, s_2) with the profile given in player order.
  const Rational& payoff(Player p, int s1, int s2) const { return payoffs_[index(p)](s1, s2); }

  friend bool operator==(const Game& a, const Game& b);

 private:
  std::array<std::string, 2> player_names_;
  std::array<std::vector<std::string>, 2> strategies_;
  std::array<RationalMatrix, 2> payoffs_;
  std::array<RationalMatrix, 2> own_view_;
};

/// Mixed strategy of `owner`; `weights` is indexed by the owner's strategies.
struct MixedStrategy {
  Player owner = Player::one;
  RationalVector weights;

  std::vector<int> support() const;
  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.owner == b.owner && a.weights == b.weights;
  }
};

MixedStrategy point_mass(const Game& game, Player owner, int strategy);
/// Builds a mixed strategy from labelled weights; unlisted strategies get 0.
MixedStrategy make_mixed(const Game& game, Player owner,
                         const std::map<std::string, Rational>& weights);
/// Throws InputError unless weights are nonnegative, sum to 1 and match the
/// owner's strategy count.
void validate(const Game& game, const MixedStrategy& mix);

Rational expected_utility(const Game& game, Player i, int s_i, const MixedStrategy& mix_j);
Rational expected_utility(const Game& game, Player i, std::string_view s_i,
                          const MixedStrategy& mix_j);

/// Expected utility of every strategy of `i` against a distribution over the
/// opponent's strategies: u_i * mix.
template <typename Derived>
RationalVector utilities_against(const Game& game, Player i,
                                 const Eigen::MatrixBase<Derived>& opponent_mix) {
  return game.utility(i) * opponent_mix;
}

std::vector<Rational> lex_utility_vector(const Game& game, Player i, int s_i,
                                         std::span<const MixedStrategy> beliefs);

enum class LexOrder { less, equal, greater };

/// Lexicographic comparison; the first strict difference decides.
LexOrder lex_compare(std::span<const Rational> u, std::span<const Rational> v);

std::string to_string(LexOrder order);

}  // namespace egk
