#include "egk/fixtures.hpp"

#include <stdexcept>

namespace egk::fixtures {
namespace {

RationalMatrix point_rows(int n, std::initializer_list<int> worlds) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(worlds.size()), n);
  int k = 0;
  for (int w : worlds) m(k++, w) = 1;
  return m;
}

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("fixture does not reproduce ") + what);
}

bool same(const EventSet& e, std::initializer_list<int> worlds) {
  return (e == make_event(static_cast<int>(e.size()), worlds)).all();
}

/// Worlds w1..w4 = (A,C), (A,D), (B,C), (B,D) with player 1 grouping by its
/// own strategy and player 2 likewise.
StandardKripkeModel frame() {
  StandardKripkeModel m{myerson_game(), {"w1", "w2", "w3", "w4"}, {}, {}};
  m.sigma[0] = {0, 0, 1, 1};
  m.sigma[1] = {0, 1, 0, 1};
  m.access[0] = AccessRelation::Constant(4, 4, false);
  m.access[1] = AccessRelation::Constant(4, 4, false);
  for (int w = 0; w < 4; ++w) {
    for (int v = 0; v < 4; ++v) {
      m.access[0](w, v) = m.sigma[0][static_cast<std::size_t>(w)] == m.sigma[0][static_cast<std::size_t>(v)];
      m.access[1](w, v) = m.sigma[1][static_cast<std::size_t>(w)] == m.sigma[1][static_cast<std::size_t>(v)];
    }
  }
  return m;
}

// The other world in each player's class, indexed by world.
constexpr int kPartner1[4] = {1, 0, 3, 2};
constexpr int kPartner2[4] = {2, 3, 0, 1};
// Lower-indexed (first) and higher-indexed world of each player's class.
constexpr int kOrder1[4][2] = {{0, 1}, {0, 1}, {2, 3}, {2, 3}};
constexpr int kOrder2[4][2] = {{0, 2}, {1, 3}, {0, 2}, {1, 3}};

}  // namespace

Game myerson_game() {
  RationalMatrix u(2, 2);
  u << 1, 0, 0, 0;
  return Game({"1", "2"}, {std::vector<std::string>{"A", "B"}, std::vector<std::string>{"C", "D"}},
              {u, u});
}

LexEpistemicModel myerson_lex_types() {
  LexEpistemicModel m{myerson_game(), {std::vector<std::string>{"th1"}, std::vector<std::string>{"th2"}}, {}};
  // Rows: opponent strategies; single column: the opponent's only type.
  PairDistribution first(2, 1), second(2, 1);
  first << 1, 0;
  second << 0, 1;
  m.beliefs[0] = {{first, second}};
  m.beliefs[1] = {{first, second}};
  return m;
}

OrderedKripkeModel myerson_ordered_model() {
  OrderedKripkeModel m{frame(), {}};
  for (int w = 0; w < 4; ++w) {
    m.lambda[0].push_back(point_rows(4, {w, kPartner1[w]}));
    m.lambda[1].push_back(point_rows(4, {w, kPartner2[w]}));
  }
  const auto l = lrat(m);
  expect(same(l.of(Player::one), {0, 1}), "LRAT_1 = {w1,w2}");
  expect(same(l.of(Player::two), {0, 2}), "LRAT_2 = {w1,w3}");
  expect(same(l.all, {0}), "LRAT = {w1}");
  expect(same(level1_belief(m, Player::one, l.all), {0}), "B_1^1(LRAT) = {w1}");
  expect(same(level1_belief(m, Player::two, l.all), {0}), "B_2^1(LRAT) = {w1}");
  expect(same(common_level1_belief(m, l.all), {0}), "CB1(LRAT) = {w1}");
  expect(same(common_belief(m.base, l.all), {}), "CB(LRAT) = {}");
  return m;
}

ProbKripkeModel myerson_prob_model(const Epsilon& eps) {
  ProbKripkeModel m{frame(), {RationalMatrix::Zero(4, 4), RationalMatrix::Zero(4, 4)}};
  const Rational& e = eps.value();
  for (int w = 0; w < 4; ++w) {
    m.p[0](w, kOrder1[w][0]) = 1 - e;
    m.p[0](w, kOrder1[w][1]) = e;
    m.p[1](w, kOrder2[w][0]) = 1 - e;
    m.p[1](w, kOrder2[w][1]) = e;
  }
  const auto r = rat(m);
  expect(same(r.of(Player::one), {0, 1}), "RAT_1 = {w1,w2}");
  expect(same(r.of(Player::two), {0, 2}), "RAT_2 = {w1,w3}");
  expect(same(r.all, {0}), "RAT = {w1}");
  expect(same(common_belief(m.base, r.all), {}), "CB(RAT) = {}");
  if (e < Rational(1, 2)) {
    expect(same(upper_common_belief(m, eps, r.all), {0}), "CB>eps(RAT) = {w1}");
  }
  return m;
}

ProbEpistemicModel myerson_prob_types(const Epsilon& eps) {
  ProbEpistemicModel m{myerson_game(), {std::vector<std::string>{"t1"}, std::vector<std::string>{"t2"}}, {}};
  PairDistribution b(2, 1);
  b << 1 - eps.value(), eps.value();
  m.beliefs[0] = {b};
  m.beliefs[1] = {b};
  return m;
}

}  // namespace egk::fixtures
