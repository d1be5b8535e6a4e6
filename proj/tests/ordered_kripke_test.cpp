#include <gtest/gtest.h>

#include "egk/fixtures.hpp"
#include "egk/ordered_kripke.hpp"
#include "support/testkit.hpp"

namespace egk {
namespace {

using testkit::Rng;

bool same(const EventSet& e, std::initializer_list<int> worlds) {
  return (e == make_event(static_cast<int>(e.size()), worlds)).all();
}

TEST(OrderedModel, ExampleSets) {
  const auto m = fixtures::myerson_ordered_model();
  EXPECT_TRUE(validate_ordered(m).empty());
  EXPECT_TRUE(check_caution(m).empty());
  const auto l = lrat(m);
  EXPECT_TRUE(same(l.of(Player::one), {0, 1}));
  EXPECT_TRUE(same(l.of(Player::two), {0, 2}));
  EXPECT_TRUE(same(l.all, {0}));
  for (Player i : kPlayers) {
    EXPECT_TRUE(same(level1_belief(m, i, l.all), {0}));
    EXPECT_TRUE(same(belief(m.base, i, l.all), {}));
  }
  EXPECT_TRUE(same(common_level1_belief(m, l.all), {0}));
  EXPECT_TRUE(same(common_belief(m.base, l.all), {}));
}

TEST(OrderedModel, ExampleIsNotLambdaConstant) {
  const auto vs = check_lambda_constancy(fixtures::myerson_ordered_model());
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs.front().rule, Rule::lambda_constancy);
}

TEST(OrderedModel, ExampleStructure) {
  const auto r = check_structural_conditions(fixtures::myerson_ordered_model());
  EXPECT_TRUE(r.disjoint_supports);
  EXPECT_TRUE(r.surjection);
  EXPECT_TRUE(r.violations.empty());
}

TEST(OrderedModel, LexPreferenceAtW1) {
  const auto m = fixtures::myerson_ordered_model();
  // At w1 player 1 puts C first: A beats B on level 1.
  EXPECT_EQ(lex_prefers(m, Player::one, 0, 0, 1), LexOrder::greater);
  EXPECT_EQ(lex_prefers(m, Player::one, 0, 1, 0), LexOrder::less);
  EXPECT_EQ(lex_optimal(m, Player::one, 0), std::vector<int>{0});
  // At w2 player 1 puts D first: tie on level 1, A still wins on level 2.
  const RationalMatrix u = level_utilities(m, Player::one, 1);
  EXPECT_EQ(u(0, 0), 0);
  EXPECT_EQ(u(0, 1), 0);
  EXPECT_EQ(u(1, 0), 1);
  EXPECT_EQ(lex_optimal(m, Player::one, 1), std::vector<int>{0});
}

TEST(OrderedModel, InjectivityAndMeasure) {
  auto m = fixtures::myerson_ordered_model();
  m.lambda[0][0].row(1) = m.lambda[0][0].row(0);
  auto vs = validate_ordered(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].rule, Rule::lambda_injectivity);
  m = fixtures::myerson_ordered_model();
  m.lambda[1][3](0, 3) = rational(1, 2);
  vs = validate_ordered(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].rule, Rule::lambda_measure);
  m = fixtures::myerson_ordered_model();
  m.lambda[0][0].row(1).setZero();
  m.lambda[0][0](1, 2) = 1;
  vs = validate_ordered(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].rule, Rule::lambda_support);
}

TEST(OrderedModel, NonCautiousWorldIsNamed) {
  auto m = fixtures::myerson_ordered_model();
  // Player 2 at w4 keeps only its first level (B): A is never weighted.
  m.lambda[1][3] = m.lambda[1][3].topRows(1).eval();
  const auto vs = check_caution(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].player, Player::two);
  EXPECT_EQ(vs[0].worlds, std::vector<int>{3});
  const auto r = check_structural_conditions(m);
  EXPECT_FALSE(r.surjection);
}

TEST(OrderedModel, GeneratedModelsAreValidAndCautious) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testkit::random_frame(rng, testkit::random_game(rng), true);
    const bool structural = testkit::coin(rng);
    const auto m = testkit::random_ordered_model(rng, f, {structural, testkit::coin(rng)});
    EXPECT_TRUE(validate_ordered(m).empty());
    EXPECT_TRUE(check_caution(m).empty());
    if (structural) EXPECT_TRUE(check_structural_conditions(m).violations.empty());
  }
}

// Lexicographic optimality against a direct level-by-level scan.
TEST(OrderedModel, LexOptimalMatchesDirectScan) {
  Rng rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const Game g = testkit::random_game(rng);
    const auto m = testkit::random_ordered_model(rng, testkit::random_frame(rng, g, true), {testkit::coin(rng), true});
    for (Player i : kPlayers) {
      const Player j = opponent(i);
      for (int w = 0; w < m.base.num_worlds(); ++w) {
        std::vector<int> alive(static_cast<std::size_t>(g.num_strategies(i)));
        std::iota(alive.begin(), alive.end(), 0);
        const auto& lam = m.levels(i, w);
        for (Eigen::Index k = 0; k < lam.rows(); ++k) {
          std::vector<Rational> u;
          for (int s : alive) {
            Rational x = 0;
            for (int v = 0; v < m.base.num_worlds(); ++v) x += lam(k, v) * g.utility(i)(s, m.base.strategy_at(j, v));
            u.push_back(x);
          }
          const Rational best = *std::max_element(u.begin(), u.end());
          std::vector<int> next;
          for (std::size_t a = 0; a < alive.size(); ++a) {
            if (u[a] == best) next.push_back(alive[a]);
          }
          alive = next;
        }
        EXPECT_EQ(lex_optimal(m, i, w), alive);
      }
    }
  }
}

TEST(OrderedModel, LevelOneOperatorLaws) {
  Rng rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = testkit::random_ordered_model(rng, testkit::random_frame(rng, testkit::random_game(rng), true),
                                                 {testkit::coin(rng), testkit::coin(rng)});
    const int n = m.base.num_worlds();
    EventSet e(n);
    for (int w = 0; w < n; ++w) e(w) = testkit::coin(rng);
    for (Player i : kPlayers) {
      const AccessRelation r1 = level1_access(m, i);
      EXPECT_TRUE(is_subset(r1, m.base.relation(i)));
      EXPECT_TRUE((level1_belief(m, i, e) == testkit::naive_box(r1, e)).all());
      EXPECT_TRUE(is_subset(belief(m.base, i, e), level1_belief(m, i, e)));
    }
    EXPECT_TRUE(is_subset(common_belief(m.base, e), common_level1_belief(m, e)));
  }
}

}  // namespace
}  // namespace egk
