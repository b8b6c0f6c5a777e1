#include <gtest/gtest.h>

#include <random>

#include "exlab/error.hpp"
#include "exlab/paper_check.hpp"
#include "exlab/scenarios.hpp"

namespace exlab {
namespace {

BoxEvent event(std::vector<std::size_t> settings, std::vector<std::size_t> outcomes) {
  return {std::move(settings), std::move(outcomes)};
}

Behavior random_local_behavior(std::mt19937& rng, const BoxScenario& scenario) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> weight(1, 5);
  std::vector<Behavior> parts;
  std::vector<Rational> weights;
  Rational total;
  for (int k = terms(rng); k > 0; --k) {
    std::vector<std::vector<std::size_t>> response;
    for (std::size_t p = 0; p < scenario.parties(); ++p) {
      response.emplace_back();
      for (const auto n_outcomes : scenario.outcomes[p]) response.back().push_back(rng() % n_outcomes);
    }
    parts.push_back(deterministic_behavior(scenario, response));
    weights.emplace_back(weight(rng));
    total += weights.back();
  }
  for (auto& w : weights) w /= total;
  return mix_behaviors(parts, weights);
}

TEST(Builders, CycleAndFamilies) {
  EXPECT_EQ(cycle_complex(5).facets(), (std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_THROW(cycle_complex(2), Error);
  EXPECT_EQ(complete_graph_complex(5).facets().size(), 10u);
  EXPECT_EQ(full_simplex_complex(5).facets(), (std::vector<VertexSet>{{0, 1, 2, 3, 4}}));
  EXPECT_EQ(complete_graph_complex(2), full_simplex_complex(2));
  EXPECT_EQ(ce_bound(cycle_complex(3)).value, Rational(1));
  EXPECT_EQ(e_bound(cycle_complex(5)).value, Rational(5, 2));
}

TEST(PrBox, Table) {
  const Behavior pr = pr_box_behavior();
  EXPECT_EQ(pr.probability(event({0, 0}, {0, 0})), Rational(1, 2));
  EXPECT_EQ(pr.probability(event({0, 0}, {0, 1})), Rational(0));
  EXPECT_EQ(pr.probability(event({1, 1}, {0, 1})), Rational(1, 2));
  EXPECT_EQ(pr.table().size(), 8u);
  for (const auto& [e, p] : pr.table()) EXPECT_EQ(p, Rational(1, 2));
}

TEST(Behavior, RejectsBadTables) {
  const BoxScenario s = BoxScenario::uniform(1, 1, 2);
  EXPECT_THROW(Behavior(s, {{event({0}, {0}), Rational(1, 2)}}), Error);
  EXPECT_THROW(Behavior(s, {{event({0}, {2}), Rational(1)}}), Error);
  EXPECT_THROW(Behavior(s, {{event({0}, {0}), Rational(3, 2)}, {event({0}, {1}), Rational(-1, 2)}}), Error);
  EXPECT_NO_THROW(Behavior(s, {{event({0}, {1}), Rational(1)}}));
}

TEST(NoSignaling, PrBoxAndProductsPass) {
  EXPECT_TRUE(no_signaling_check(pr_box_behavior()).empty());
  EXPECT_TRUE(no_signaling_check(product_behavior(pr_box_behavior(), pr_box_behavior())).empty());
}

TEST(NoSignaling, DetectsSignallingTable) {
  // a = 1 - y when x = 0, b uniform and independent of everything.
  const BoxScenario s = BoxScenario::uniform(2, 2, 2);
  std::map<BoxEvent, Rational> table;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t b = 0; b < 2; ++b) {
        if (x == 0) {
          table[event({x, y}, {1 - y, b})] = Rational(1, 2);
        } else {
          table[event({x, y}, {0, b})] = Rational(1, 4);
          table[event({x, y}, {1, b})] = Rational(1, 4);
        }
      }
    }
  }
  const auto defects = no_signaling_check(Behavior(s, table));
  ASSERT_EQ(defects.size(), 1u);
  EXPECT_NE(defects[0].find("party 0 setting 0"), std::string::npos);
}

TEST(NoSignaling, RandomLocalMixturesAndTheirProducts) {
  std::mt19937 rng(17);
  const BoxScenario s = BoxScenario::uniform(2, 2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Behavior a = random_local_behavior(rng, s);
    const Behavior b = random_local_behavior(rng, s);
    ASSERT_TRUE(no_signaling_check(a).empty());
    ASSERT_TRUE(no_signaling_check(product_behavior(a, b)).empty());
  }
}

TEST(Labels, RoundTripAndStrictParsing) {
  const BoxScenario joint = joint_scenario(BoxScenario::uniform(2, 2, 2), BoxScenario::uniform(2, 2, 2));
  const BoxEvent e = event({0, 1, 1, 0}, {1, 0, 0, 1});
  EXPECT_EQ(event_label(joint, e), "1,0;0,1|0,1;1,0");
  EXPECT_EQ(parse_event_label(joint, "1,0;0,1|0,1;1,0"), e);
  for (const auto& ev : all_events(joint)) ASSERT_EQ(parse_event_label(joint, event_label(joint, ev)), ev);
  for (const char* bad : {"1,0,0,1|0,1,1,0", "1,0;0,1|0,1;1,2", "1,0;0,1", "1,0;0,1|0,1;1,0|", "01,0;0,1|0,1;1,0",
                          "1,0;0, 1|0,1;1,0", "1,0;0|0,1;1,0"}) {
    EXPECT_THROW(parse_event_label(joint, bad), Error) << bad;
  }
}

TEST(LocalOrthogonality, PairsFromSharedSetting) {
  EXPECT_TRUE(locally_orthogonal(event({0, 0}, {1, 0}), event({0, 1}, {0, 1})));
  EXPECT_FALSE(locally_orthogonal(event({0, 0}, {1, 0}), event({0, 0}, {1, 0})));
  EXPECT_FALSE(locally_orthogonal(event({0, 0}, {1, 0}), event({1, 1}, {0, 1})));
}

TEST(LocalOrthogonality, SymmetricAndIrreflexiveOnSmallScenarios) {
  for (std::size_t parties = 1; parties <= 2; ++parties) {
    for (std::size_t settings = 1; settings <= 2; ++settings) {
      for (std::size_t outcomes = 1; outcomes <= 2; ++outcomes) {
        const auto events = all_events(BoxScenario::uniform(parties, settings, outcomes));
        for (const auto& a : events) {
          ASSERT_FALSE(locally_orthogonal(a, a));
          for (const auto& b : events) ASSERT_EQ(locally_orthogonal(a, b), locally_orthogonal(b, a));
        }
      }
    }
  }
}

TEST(LoComplex, ContextFacetsAndPairs) {
  const auto c = lo_complex(BoxScenario::uniform(2, 2, 2));
  EXPECT_EQ(c.n_vertices(), 16u);
  EXPECT_TRUE(validate(c).empty());
  // Each context's four outcome events are one facet.
  EXPECT_TRUE(is_exclusive_set(c, {0, 1, 2, 3}));
  const auto a = *c.find_label("1,0|0,0");
  const auto b = *c.find_label("0,1|0,1");
  EXPECT_TRUE(is_exclusive_set(c, {a, b}));
}

TEST(LoComplex, PrBoxContainsPentagonOfHalves) {
  const Behavior pr = pr_box_behavior();
  const auto c = lo_complex(pr, Support::nonzero);
  EXPECT_EQ(c.n_vertices(), 8u);
  const auto pentagons = induced_pentagons(c);
  ASSERT_FALSE(pentagons.empty());
  const Assignment p = assignment_from_behavior(c, pr);
  for (const auto v : pentagons.front()) EXPECT_EQ(p[v], Rational(1, 2));
  EXPECT_EQ(induced_subcomplex(c, pentagons.front()).facets().size(), 5u);
}

TEST(LoComplex, FactorEmbedsInJointScenario) {
  const BoxScenario single = BoxScenario::uniform(2, 2, 2);
  const BoxScenario joint = joint_scenario(single, single);
  const auto factor = lo_complex(single);
  const auto whole = lo_complex(joint);
  for (const auto& fixed : all_events(single)) {
    VertexSet slice;
    for (const auto& e : all_events(single)) {
      BoxEvent j = e;
      j.settings.insert(j.settings.end(), fixed.settings.begin(), fixed.settings.end());
      j.outcomes.insert(j.outcomes.end(), fixed.outcomes.begin(), fixed.outcomes.end());
      slice.push_back(*whole.find_label(event_label(joint, j)));
    }
    ASSERT_EQ(induced_subcomplex(whole, slice).facets(), factor.facets());
  }
}

TEST(ProductBehavior, JointProbabilities) {
  const Behavior pr = pr_box_behavior();
  const Behavior pair = product_behavior(pr, pr);
  EXPECT_EQ(pair.scenario().parties(), 4u);
  EXPECT_EQ(pair.probability(parse_event_label(pair.scenario(), "1,1;1,1|0,0;0,0")), Rational(1, 4));
  // 8 non-zero events per box give 8 * 8 non-zero joint events.
  EXPECT_EQ(pair.support().size(), pr.support().size() * pr.support().size());
  EXPECT_EQ(pair.support().size(), 64u);
}

TEST(ProductBehavior, DeterministicSingleOutcomeFactorIsNeutral) {
  const BoxScenario trivial = BoxScenario::uniform(1, 1, 1);
  const Behavior one = deterministic_behavior(trivial, {{0}});
  const Behavior pr = pr_box_behavior();
  const Behavior prod = product_behavior(pr, one);
  ASSERT_EQ(prod.table().size(), pr.table().size());
  for (const auto& [e, p] : pr.table()) {
    BoxEvent extended = e;
    extended.settings.push_back(0);
    extended.outcomes.push_back(0);
    EXPECT_EQ(prod.probability(extended), p);
  }
  EXPECT_EQ(lo_complex(prod, Support::nonzero).facets(), lo_complex(pr, Support::nonzero).facets());
}

TEST(AssignmentFromBehavior, LooksUpByLabel) {
  const Behavior pr = pr_box_behavior();
  const auto all = lo_complex(pr, Support::all);
  const Assignment p = assignment_from_behavior(all, pr);
  EXPECT_EQ(p[*all.find_label("0,1|0,0")], Rational(0));
  EXPECT_EQ(p[*all.find_label("0,0|0,0")], Rational(1, 2));
  EXPECT_THROW(assignment_from_behavior(pentagon(), pr), Error);
  const auto bogus = SimplicialComplex::from_facets(1, {}, {"not an event"});
  EXPECT_THROW(assignment_from_behavior(bogus, pr), Error);
}

TEST(AssignmentFromBehavior, AlwaysSatisfiesE) {
  const Behavior pr = pr_box_behavior();
  const Behavior pair = product_behavior(pr, pr);
  for (const Behavior* b : {&pr, &pair}) {
    const auto c = lo_complex(*b, Support::nonzero);
    EXPECT_TRUE(check_assignment(c, assignment_from_behavior(c, *b), ModelClass::E).empty());
  }
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const BoxScenario s = BoxScenario::uniform(2, 2, 2 + trial % 2);
    const Behavior b = random_local_behavior(rng, s);
    const auto c = lo_complex(b, trial % 3 == 0 ? Support::all : Support::nonzero);
    ASSERT_TRUE(check_assignment(c, assignment_from_behavior(c, b), ModelClass::E).empty());
  }
}

TEST(TwoPrBoxes, CeViolationIsAPentagramOfQuarters) {
  const Behavior pr = pr_box_behavior();
  const Behavior pair = product_behavior(pr, pr);
  const auto c = lo_complex(pair, Support::nonzero);
  const Assignment p = assignment_from_behavior(c, pair);
  const auto v = find_ce_violation(c, p);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->clique.size(), 5u);
  EXPECT_EQ(v->total, Rational(5, 4));
  for (const auto u : v->clique) EXPECT_EQ(p[u], Rational(1, 4));
  EXPECT_TRUE(is_complete_graph_complex(induced_subcomplex(c, v->clique)));
  EXPECT_FALSE(is_exclusive_set(c, v->clique));
}

TEST(SinglePrBox, NoCeViolation) {
  const Behavior pr = pr_box_behavior();
  for (const Support support : {Support::nonzero, Support::all}) {
    const auto c = lo_complex(pr, support);
    EXPECT_FALSE(find_ce_violation(c, assignment_from_behavior(c, pr)));
  }
}

TEST(PaperCheck, EveryClaimPasses) {
  const auto report = paper_check();
  EXPECT_EQ(report.claims.size(), 12u);
  for (const auto& claim : report.claims) EXPECT_TRUE(claim.pass) << claim.id << ": " << claim.computed;
}

}  // namespace
}  // namespace exlab
