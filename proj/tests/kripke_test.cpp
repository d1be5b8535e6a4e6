#include <gtest/gtest.h>

#include "egk/epsilon_kripke.hpp"
#include "egk/error.hpp"
#include "egk/fixtures.hpp"
#include "support/testkit.hpp"

namespace egk {
namespace {

using testkit::Rng;

bool same(const EventSet& e, std::initializer_list<int> worlds) {
  return (e == make_event(static_cast<int>(e.size()), worlds)).all();
}

std::set<Rule> rules_of(const std::vector<Violation>& vs) {
  std::set<Rule> out;
  for (const auto& v : vs) out.insert(v.rule);
  return out;
}

EventSet random_event(Rng& rng, int n) {
  EventSet e(n);
  for (int w = 0; w < n; ++w) e(w) = testkit::coin(rng);
  return e;
}

TEST(Events, Helpers) {
  const EventSet e = make_event(5, {1, 3});
  EXPECT_EQ(members(e), (std::vector<int>{1, 3}));
  EXPECT_TRUE(is_subset(e, full_event(5)));
  EXPECT_FALSE(is_subset(full_event(5), e));
  EXPECT_TRUE(is_subset(empty_event(5), e));
}

TEST(StandardModel, FixtureIsValid) {
  const auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4)));
  EXPECT_TRUE(validate_standard(m.base).empty());
  EXPECT_TRUE(validate_probabilistic(m).empty());
  EXPECT_EQ(m.base.accessible(Player::one, 0), (std::vector<int>{0, 1}));
  EXPECT_EQ(m.base.world_index("w3"), 2);
  EXPECT_THROW(m.base.world_index("w9"), InputError);
}

TEST(StandardModel, EmptyModelIsReported) {
  StandardKripkeModel m{fixtures::myerson_game(), {}, {}, {}};
  const auto vs = validate_standard(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].rule, Rule::world_count);
}

TEST(StandardModel, ReflexiveUniversalRelationBreaksSigmaConstancy) {
  auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4))).base;
  m.access[0].setConstant(true);
  EXPECT_EQ(rules_of(validate_standard(m)), std::set<Rule>{Rule::sigma_constancy});
}

TEST(StandardModel, OutOfRangeStrategy) {
  auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4))).base;
  m.sigma[1][3] = 7;
  EXPECT_TRUE(rules_of(validate_standard(m)).contains(Rule::sigma_range));
}

TEST(StandardModel, DescribeNamesWorlds) {
  auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4))).base;
  m.access[0].row(2).setConstant(false);
  const auto vs = validate_standard(m);
  ASSERT_FALSE(vs.empty());
  const std::string text = describe(vs.front(), m);
  EXPECT_NE(text.find("w3"), std::string::npos);
  EXPECT_NE(text.find("seriality"), std::string::npos);
}

// Validators against a direct reading of the KD45 definitions on arbitrary
// relations, including non-KD45 ones.
TEST(StandardModel, KD45ValidatorMatchesTripleLoopOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Game g = testkit::random_game(rng);
    auto m = testkit::random_frame(rng, g, false).model;
    const int n = m.num_worlds();
    for (Player i : kPlayers) {
      // Flip a few edges; sometimes none.
      const int flips = testkit::uniform(rng, 0, 3);
      for (int f = 0; f < flips; ++f) {
        const int a = testkit::uniform(rng, 0, n - 1), b = testkit::uniform(rng, 0, n - 1);
        m.access[index(i)](a, b) = !m.access[index(i)](a, b);
      }
    }
    const auto vs = validate_standard(m);
    for (Player i : kPlayers) {
      const auto flags = testkit::kd45_flags(m.relation(i));
      auto has = [&](Rule r) {
        return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == r && v.player == i; });
      };
      EXPECT_EQ(has(Rule::seriality), !flags.serial);
      EXPECT_EQ(has(Rule::transitivity), !flags.transitive);
      EXPECT_EQ(has(Rule::euclideanness), !flags.euclidean);
    }
  }
}

TEST(StandardModel, GeneratedFramesAreValid) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testkit::random_frame(rng, testkit::random_game(rng), testkit::coin(rng));
    EXPECT_TRUE(validate_standard(f.model).empty());
    EXPECT_TRUE(validate_probabilistic(testkit::random_prob_model(rng, f)).empty());
  }
}

// Belief operator laws on valid KD45 frames.
TEST(BeliefOperator, KD45Laws) {
  Rng rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = testkit::random_frame(rng, testkit::random_game(rng), testkit::coin(rng)).model;
    const int n = m.num_worlds();
    const EventSet e = random_event(rng, n), f = random_event(rng, n);
    for (Player i : kPlayers) {
      const EventSet be = belief(m, i, e);
      EXPECT_TRUE((be == testkit::naive_box(m.relation(i), e)).all());
      EXPECT_TRUE((belief(m, i, e && f) == (be && belief(m, i, f))).all());
      EXPECT_TRUE(belief(m, i, full_event(n)).all());
      EXPECT_FALSE(belief(m, i, empty_event(n)).any());
      EXPECT_TRUE(is_subset(be, belief(m, i, be)));
      EXPECT_TRUE(is_subset(!be, belief(m, i, !be)));
      EXPECT_TRUE(is_subset(belief(m, i, e), belief(m, i, e || f)));
    }
    const EventSet cb = common_belief(m, e);
    EXPECT_TRUE((cb == (belief(m, Player::one, e) && belief(m, Player::two, e))).all());
  }
}

TEST(Rationality, FixtureSets) {
  for (const Rational& e : {rational(1, 4), rational(1, 3), rational(1, 10)}) {
    const auto m = fixtures::myerson_prob_model(Epsilon(e));
    const auto r = rat(m);
    EXPECT_TRUE(same(r.of(Player::one), {0, 1}));
    EXPECT_TRUE(same(r.of(Player::two), {0, 2}));
    EXPECT_TRUE(same(r.all, {0}));
    EXPECT_TRUE(same(common_belief(m.base, r.all), {}));
  }
}

TEST(Rationality, InducedMixture) {
  const auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4)));
  const RationalVector mix = induced_opponent_mixture(m, Player::one, 0);
  EXPECT_EQ(mix(0), rational(3, 4));
  EXPECT_EQ(mix(1), rational(1, 4));
  const RationalMatrix ind = strategy_indicator(m.base, Player::two);
  EXPECT_EQ(ind.rows(), 4);
  EXPECT_EQ(ind.row(1).sum(), 1);
  EXPECT_EQ(ind(1, 1), 1);
}

TEST(Rationality, RatMatchesDirectMaximisation) {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = testkit::random_game(rng);
    const auto m = testkit::random_prob_model(rng, testkit::random_frame(rng, g));
    const auto r = rat(m);
    for (Player i : kPlayers) {
      const Player j = opponent(i);
      for (int w = 0; w < m.base.num_worlds(); ++w) {
        std::vector<Rational> u(static_cast<std::size_t>(g.num_strategies(i)), Rational(0));
        for (int v = 0; v < m.base.num_worlds(); ++v) {
          const Rational& p = m.measure(i)(w, v);
          for (int s = 0; s < g.num_strategies(i); ++s) u[static_cast<std::size_t>(s)] += p * g.utility(i)(s, m.base.strategy_at(j, v));
        }
        const Rational best = *std::max_element(u.begin(), u.end());
        EXPECT_EQ(r.of(i)(w), u[static_cast<std::size_t>(m.base.strategy_at(i, w))] == best);
      }
    }
  }
}

TEST(IesdsCharacterization, HoldsOnRandomModels) {
  Rng rng(35);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Game g = testkit::random_game(rng);
    const auto m = testkit::random_prob_model(rng, testkit::random_frame(rng, g, testkit::coin(rng)));
    const auto report = check_theorem_1_1(m);
    EXPECT_TRUE(report.holds);
    EXPECT_TRUE(report.failures.empty());
    nonempty += report.cb_rat.any() ? 1 : 0;
  }
  EXPECT_GT(nonempty, 0);
}

TEST(IesdsCharacterization, WitnessCoversEverySurvivor) {
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const Game g = testkit::random_game(rng);
    const Restriction ie = iesds(g).survivors;
    for (int a : ie.of(Player::one)) {
      for (int b : ie.of(Player::two)) {
        const auto [m, w] = construct_ieds_witness(g, {a, b});
        EXPECT_TRUE(validate_probabilistic(m).empty());
        EXPECT_EQ(m.base.strategy_at(Player::one, w), a);
        EXPECT_EQ(m.base.strategy_at(Player::two, w), b);
        EXPECT_TRUE(common_belief(m.base, rat(m).all)(w));
      }
    }
  }
}

// ---------------------------------------------------------------- ε

TEST(Epsilon, Range) {
  EXPECT_THROW(Epsilon(rational(0)), InputError);
  EXPECT_THROW(Epsilon(rational(1)), InputError);
  EXPECT_THROW(Epsilon::parse("3/2"), InputError);
  EXPECT_EQ(Epsilon::parse("1/4").value(), rational(1, 4));
}

TEST(Epsilon, UpperOperatorsNeedLessThanHalf) {
  const auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4)));
  EXPECT_THROW(upper_access(m, Player::one, Epsilon(rational(1, 2))), InputError);
  EXPECT_THROW(upper_common_belief(m, Epsilon(rational(2, 3)), full_event(4)), InputError);
}

TEST(Epsilon, FixtureUpperSets) {
  for (const Rational& e : {rational(1, 4), rational(1, 3)}) {
    const Epsilon eps(e);
    const auto m = fixtures::myerson_prob_model(eps);
    const auto r = rat(m);
    EXPECT_TRUE(same(upper_common_belief(m, eps, r.all), {0}));
    EXPECT_TRUE(same(upper_belief(m, Player::one, eps, r.all), {0, 1}));
    EXPECT_TRUE(same(upper_belief(m, Player::two, eps, r.all), {0, 2}));
    EXPECT_TRUE(check_prob_caution(m).empty());
    EXPECT_TRUE(check_trembling(m, eps).empty());
    EXPECT_TRUE(check_trembling(m, eps, TremblingReading::belief).empty());
  }
}

TEST(Epsilon, TremblingFailsAtHalfTheWeight) {
  const Epsilon eps(rational(1, 4));
  const auto m = fixtures::myerson_prob_model(eps);
  const auto vs = check_trembling(m, Epsilon(rational(1, 8)));
  ASSERT_FALSE(vs.empty());
  for (const auto& v : vs) EXPECT_EQ(v.rule, Rule::trembling);
}

TEST(Epsilon, CautionNeedsPositiveWeight) {
  auto m = fixtures::myerson_prob_model(Epsilon(rational(1, 4)));
  // Player 1 at w1, w2 stops weighting w2 (the only D world in reach).
  m.p[0].row(0) << 1, 0, 0, 0;
  m.p[0].row(1) << 1, 0, 0, 0;
  const auto vs = check_prob_caution(m);
  ASSERT_EQ(vs.size(), 2u);
  EXPECT_EQ(vs[0].player, Player::one);
}

TEST(Epsilon, ReadingsParse) {
  EXPECT_EQ(parse_trembling_reading("belief"), TremblingReading::belief);
  EXPECT_THROW(parse_trembling_reading("sideways"), InputError);
}

TEST(Epsilon, UpperOperatorLaws) {
  Rng rng(37);
  const Epsilon eps(rational(1, 5));
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testkit::random_prob_model(rng, testkit::random_frame(rng, testkit::random_game(rng)));
    const int n = m.base.num_worlds();
    const EventSet e = random_event(rng, n);
    for (Player i : kPlayers) {
      const AccessRelation up = upper_access(m, i, eps);
      EXPECT_TRUE(is_subset(up, m.base.relation(i)));
      EXPECT_TRUE(is_subset(belief(m.base, i, e), upper_belief(m, i, eps, e)));
      EXPECT_TRUE((upper_belief(m, i, eps, e) == testkit::naive_box(up, e)).all());
    }
    EXPECT_TRUE(is_subset(common_belief(m.base, e), upper_common_belief(m, eps, e)));
  }
}

TEST(Epsilon, GeneratedTremblingModelsPassBothConditions) {
  Rng rng(38);
  const Epsilon eps(rational(1, 5));
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testkit::random_trembling_model(rng, eps);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(check_prob_caution(*m).empty());
    EXPECT_TRUE(check_trembling(*m, eps).empty());
  }
}

}  // namespace
}  // namespace egk
