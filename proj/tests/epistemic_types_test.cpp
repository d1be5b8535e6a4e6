#include <gtest/gtest.h>

#include "egk/epistemic_types.hpp"
#include "egk/error.hpp"
#include "egk/fixtures.hpp"
#include "support/testkit.hpp"

namespace egk {
namespace {

using testkit::Rng;

TEST(LexTypes, ExampleModel) {
  const auto m = fixtures::myerson_lex_types();
  EXPECT_NO_THROW(validate(m));
  EXPECT_EQ(deems_possible(m, Player::one, 0), std::vector<int>{0});
  EXPECT_TRUE(type_caution(m, Player::one, 0));
  EXPECT_TRUE(primary_belief_in_rationality(m, Player::one, 0));
  EXPECT_EQ(optimal_strategies(m, Player::one, 0), std::vector<int>{0});
  EXPECT_EQ(optimal_strategies(m, Player::two, 0), std::vector<int>{0});
  const auto p = conjunction(caution_property(m), primary_rationality_property(m));
  const auto cfb = common_full_belief(m, p);
  EXPECT_EQ(cfb[0], std::vector<int>{0});
  EXPECT_EQ(cfb[1], std::vector<int>{0});
  const auto perm = permissible(m);
  EXPECT_EQ(perm[0], std::vector<int>{0});
  EXPECT_EQ(perm[1], std::vector<int>{0});
  EXPECT_EQ(m.type_index(Player::two, "th2"), 0);
  EXPECT_THROW(m.type_index(Player::two, "th9"), InputError);
}

TEST(LexTypes, PointMassIsNotCautious) {
  auto m = fixtures::myerson_lex_types();
  m.beliefs[0][0].pop_back();
  EXPECT_FALSE(type_caution(m, Player::one, 0));
  EXPECT_TRUE(common_full_belief(m, caution_property(m))[0].empty());
}

TEST(LexTypes, PrimaryBeliefOnIrrationalPairFails) {
  auto m = fixtures::myerson_lex_types();
  std::swap(m.beliefs[0][0][0], m.beliefs[0][0][1]);
  EXPECT_FALSE(primary_belief_in_rationality(m, Player::one, 0));
}

TEST(LexTypes, ValidationRejectsBadLevels) {
  auto m = fixtures::myerson_lex_types();
  m.beliefs[1][0][0](0, 0) = rational(1, 2);
  EXPECT_THROW(validate(m), InputError);
  m = fixtures::myerson_lex_types();
  m.beliefs[1][0].clear();
  EXPECT_THROW(validate(m), InputError);
}

TEST(ProbTypes, ExampleModel) {
  for (const Rational& e : {rational(1, 4), rational(1, 3)}) {
    const Epsilon eps(e);
    const auto m = fixtures::myerson_prob_types(eps);
    EXPECT_TRUE(type_caution(m, Player::one, 0));
    EXPECT_TRUE(eps_trembling(m, Player::one, 0, eps));
    EXPECT_FALSE(eps_trembling(m, Player::one, 0, Epsilon(e / 2)));
    EXPECT_EQ(optimal_strategies(m, Player::one, 0), std::vector<int>{0});
    const auto perm = eps_permissible(m, eps);
    EXPECT_EQ(perm[0], std::vector<int>{0});
    EXPECT_EQ(perm[1], std::vector<int>{0});
  }
}

/// Brute force: the largest pair of type sets closed under "deems possible"
/// whose members all satisfy P.
TypeSets brute_force_cfb(int n1, int n2, const TypeProperty& p,
                         const std::function<std::vector<int>(Player, int)>& deems) {
  TypeSets best;
  std::size_t best_size = 0;
  for (int a = 0; a < (1 << n1); ++a) {
    for (int b = 0; b < (1 << n2); ++b) {
      const std::array<int, 2> mask{a, b};
      bool ok = true;
      for (Player i : kPlayers) {
        const int n = i == Player::one ? n1 : n2;
        for (int t = 0; t < n && ok; ++t) {
          if (!(mask[index(i)] >> t & 1)) continue;
          ok = p.at(i, t);
          for (int u : deems(i, t)) ok = ok && (mask[index(opponent(i))] >> u & 1);
        }
      }
      const std::size_t size = static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a)) + std::popcount(static_cast<unsigned>(b)));
      if (ok && size >= best_size) {
        // The union of closed sets is closed, so the maximum is unique.
        best = {};
        for (int t = 0; t < n1; ++t) {
          if (a >> t & 1) best[0].push_back(t);
        }
        for (int t = 0; t < n2; ++t) {
          if (b >> t & 1) best[1].push_back(t);
        }
        best_size = size;
      }
    }
  }
  return best;
}

TEST(CommonFullBelief, MatchesBruteForceAndIsMonotone) {
  Rng rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const Game g = testkit::random_game(rng);
    auto m = testkit::random_cautious_lex_model(rng, g, 3);
    if (testkit::coin(rng)) testkit::rationalize_primary(rng, m);
    const auto caution = caution_property(m);
    const auto both = conjunction(caution, primary_rationality_property(m));
    int rounds = 0;
    const auto got = common_full_belief(m, both, &rounds);
    const auto want = brute_force_cfb(m.num_types(Player::one), m.num_types(Player::two), both,
                                      [&](Player i, int t) { return deems_possible(m, i, t); });
    EXPECT_EQ(got, want);
    EXPECT_LE(rounds, m.num_types(Player::one) + m.num_types(Player::two));
    const auto weaker = common_full_belief(m, caution);
    for (Player i : kPlayers) {
      for (int t : got[index(i)]) {
        EXPECT_TRUE(std::find(weaker[index(i)].begin(), weaker[index(i)].end(), t) != weaker[index(i)].end());
      }
    }
  }
}

TEST(Permissible, InsideDekelFudenberg) {
  Rng rng(52);
  int nonempty = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Game g = testkit::random_game(rng);
    auto m = testkit::random_cautious_lex_model(rng, g, 2);
    testkit::rationalize_primary(rng, m);
    const auto perm = permissible(m);
    const Restriction df = dekel_fudenberg(g).survivors;
    for (Player i : kPlayers) {
      for (int s : perm[index(i)]) EXPECT_TRUE(df.contains(i, s));
    }
    nonempty += perm[0].empty() ? 0 : 1;
  }
  EXPECT_GT(nonempty, 0);
}

TEST(DfLexModel, EveryTypeCautiousAndRational) {
  Rng rng(53);
  std::vector<Game> games{fixtures::myerson_game()};
  for (int k = 0; k < 30; ++k) games.push_back(testkit::random_game(rng));
  for (const Game& g : games) {
    const auto m = build_df_lex_model(g);
    EXPECT_NO_THROW(validate(m));
    const Restriction df = dekel_fudenberg(g).survivors;
    for (Player i : kPlayers) {
      ASSERT_EQ(m.num_types(i), static_cast<int>(df.of(i).size()));
      for (int t = 0; t < m.num_types(i); ++t) {
        EXPECT_TRUE(type_caution(m, i, t));
        EXPECT_TRUE(primary_belief_in_rationality(m, i, t));
        const auto opt = optimal_strategies(m, i, t);
        EXPECT_NE(std::find(opt.begin(), opt.end(), df.of(i)[static_cast<std::size_t>(t)]), opt.end());
      }
    }
    const auto perm = permissible(m);
    EXPECT_EQ(perm[0], df.of(Player::one));
    EXPECT_EQ(perm[1], df.of(Player::two));
  }
}

TEST(LexToKripke, ExampleModel) {
  const auto lex = fixtures::myerson_lex_types();
  const auto m = build_ordered_from_lex(lex);
  EXPECT_EQ(m.base.num_worlds(), 4);
  EXPECT_TRUE(validate_ordered(m).empty());
  EXPECT_TRUE(check_caution(m).empty());
  const int w = lex_world_index(lex, {0, 0}, {0, 0});
  EXPECT_TRUE(common_level1_belief(m, lrat(m).all)(w));
}

TEST(LexToKripke, RandomCautiousModels) {
  Rng rng(54);
  int built = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Game g = testkit::random_game(rng);
    auto lex = testkit::random_cautious_lex_model(rng, g, 2);
    std::optional<OrderedKripkeModel> m;
    try {
      m = build_ordered_from_lex(lex);
    } catch (const PreconditionError&) {
      continue;
    }
    ++built;
    EXPECT_TRUE(validate_ordered(*m).empty());
    EXPECT_TRUE(check_caution(*m).empty());
    // The world of (t, s) carries s and lex-optimality there matches the type.
    for (Player i : kPlayers) {
      for (int t = 0; t < lex.num_types(i); ++t) {
        const auto opt = optimal_strategies(lex, i, t);
        for (int s = 0; s < g.num_strategies(i); ++s) {
          std::array<int, 2> types{0, 0}, profile{0, 0};
          types[index(i)] = t;
          profile[index(i)] = s;
          const int w = lex_world_index(lex, types, profile);
          EXPECT_EQ(m->base.strategy_at(i, w), s);
          EXPECT_EQ(lrat(*m).of(i)(w), std::find(opt.begin(), opt.end(), s) != opt.end());
        }
      }
    }
  }
  EXPECT_GT(built, 40);
}

TEST(LexToKripke, RejectsNonCautiousTypes) {
  auto lex = fixtures::myerson_lex_types();
  lex.beliefs[0][0].pop_back();
  EXPECT_THROW(build_ordered_from_lex(lex), PreconditionError);
}

TEST(LexToKripke, MergesAdjacentDuplicateLevels) {
  auto lex = fixtures::myerson_lex_types();
  auto& levels = lex.beliefs[0][0];
  levels.insert(levels.begin(), levels.front());
  const auto m = build_ordered_from_lex(lex);
  EXPECT_TRUE(validate_ordered(m).empty());
  EXPECT_EQ(m.num_levels(Player::one, 0), 2);
}

TEST(LexToKripke, RejectsNonAdjacentDuplicateLevels) {
  auto lex = fixtures::myerson_lex_types();
  auto& levels = lex.beliefs[0][0];
  levels.push_back(levels.front());
  EXPECT_THROW(build_ordered_from_lex(lex), PreconditionError);
}

TEST(Extraction, ExampleCollapsesToOneTypeEach) {
  const Epsilon eps(rational(1, 4));
  const auto ext = extract_prob_model(fixtures::myerson_prob_model(eps));
  ASSERT_EQ(ext.model.num_types(Player::one), 1);
  ASSERT_EQ(ext.model.num_types(Player::two), 1);
  const auto& b = ext.model.belief(Player::one, 0);
  EXPECT_EQ(b(0, 0), rational(3, 4));
  EXPECT_EQ(b(1, 0), rational(1, 4));
  EXPECT_TRUE(type_caution(ext.model, Player::one, 0));
  EXPECT_TRUE(eps_trembling(ext.model, Player::one, 0, eps));
}

TEST(Extraction, QuotientProperties) {
  Rng rng(55);
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = testkit::random_prob_model(rng, testkit::random_frame(rng, testkit::random_game(rng)));
    const auto ext = extract_prob_model(m);
    EXPECT_NO_THROW(validate(ext.model));
    const int n = m.base.num_worlds();
    for (Player i : kPlayers) {
      const Player j = opponent(i);
      for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v) {
          const bool same_class = (m.base.relation(i).row(w) == m.base.relation(i).row(v)).all() &&
                                  m.measure(i).row(w) == m.measure(i).row(v);
          if (same_class) EXPECT_EQ(ext.type_of_world[index(i)][static_cast<std::size_t>(w)], ext.type_of_world[index(i)][static_cast<std::size_t>(v)]);
        }
        // b_i(t(w)) is the push-forward of p_i(w) along (σ_j, t_j).
        RationalMatrix push = RationalMatrix::Zero(m.base.game.num_strategies(j), ext.model.num_types(j));
        for (int v = 0; v < n; ++v) {
          push(m.base.strategy_at(j, v), ext.type_of_world[index(j)][static_cast<std::size_t>(v)]) += m.measure(i)(w, v);
        }
        EXPECT_EQ(push, ext.model.belief(i, ext.type_of_world[index(i)][static_cast<std::size_t>(w)]));
      }
    }
  }
}

}  // namespace
}  // namespace egk
