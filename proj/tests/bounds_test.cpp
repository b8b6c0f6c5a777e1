#include <gtest/gtest.h>

#include "exlab/bounds.hpp"
#include "exlab/error.hpp"
#include "exlab/scenarios.hpp"
#include "exlab/theta.hpp"
#include "oracles.hpp"

namespace exlab {
namespace {

const Rational kHalf(1, 2);

TEST(EBound, FiveEventExamples) {
  const auto pent = e_bound(pentagon());
  EXPECT_EQ(pent.value, Rational(5, 2));
  EXPECT_EQ(pent.witness, Assignment::uniform(5, kHalf));
  EXPECT_EQ(e_bound(pentagram()).value, Rational(5, 2));
  EXPECT_EQ(e_bound(pentachoron()).value, Rational(1));
}

TEST(EBound, EmptyComplexIsZero) {
  const auto result = e_bound(SimplicialComplex::from_facets(0, {}));
  EXPECT_EQ(result.value, Rational(0));
  EXPECT_TRUE(verify_bound_certificate(SimplicialComplex::from_facets(0, {}), result).empty());
}

TEST(EBound, CliqueComplexOfPentagonSquaredIsFive) {
  const auto closure = clique_complex(or_product(pentagon(), pentagon()));
  const auto result = e_bound(closure);
  EXPECT_EQ(result.value, Rational(5));
  EXPECT_TRUE(verify_bound_certificate(closure, result).empty());
}

TEST(NchvBound, Examples) {
  EXPECT_EQ(nchv_bound(pentagon()).value, Rational(2));
  EXPECT_EQ(nchv_bound(pentagram()).value, Rational(1));
  EXPECT_EQ(nchv_bound(SimplicialComplex::from_facets(4, {})).value, Rational(4));
  const auto witness = nchv_bound(pentagon()).witness;
  EXPECT_TRUE(check_assignment(pentagon(), witness, ModelClass::CE).empty());
}

TEST(CeBound, Examples) {
  EXPECT_EQ(ce_bound(pentagram()).value, Rational(1));
  EXPECT_EQ(ce_bound(pentagon()).value, Rational(5, 2));
  EXPECT_EQ(ce_bound(pentachoron()).value, Rational(1));
  EXPECT_EQ(ce_bound(cycle_complex(3)).value, Rational(1));
}

TEST(CeProductBound, Examples) {
  const auto kcbs = ce_product_bound(pentagon(), 2);
  EXPECT_EQ(kcbs.value.base(), Rational(5));
  EXPECT_EQ(kcbs.value.root(), 2u);
  EXPECT_EQ(ce_product_bound(pentagon(), 1).value, RootValue(Rational(5, 2)));
  EXPECT_EQ(ce_product_bound(pentachoron(), 2).value, Rational(1));
  EXPECT_THROW(ce_product_bound(pentagon(), 0), Error);
  EXPECT_THROW(ce_product_bound(pentagon(), -3), Error);
}

TEST(CeProductBound, OneCopyEqualsCeBound) {
  for (const auto& c : oracle::oracle_suite(20, 4)) {
    EXPECT_EQ(ce_product_bound(c, 1).value, ce_bound(c).value);
  }
}

TEST(Sandwich, PentagonNchvBelowThetaBelowE) {
  const RootValue theta = *theta_odd_cycle_exact(5);
  EXPECT_LT(RootValue(nchv_bound(pentagon()).value), theta);
  EXPECT_LT(theta, RootValue(e_bound(pentagon()).value));
}

TEST(CheckAssignment, Examples) {
  const auto half = Assignment::uniform(5, kHalf);
  EXPECT_TRUE(check_assignment(pentagram(), half, ModelClass::E).empty());
  const auto ce = check_assignment(pentagram(), half, ModelClass::CE);
  ASSERT_EQ(ce.size(), 1u);
  EXPECT_EQ(ce[0], (Violation{{0, 1, 2, 3, 4}, Rational(5, 2)}));
  const auto zero = Assignment::uniform(5, Rational(0));
  EXPECT_TRUE(check_assignment(pentagram(), zero, ModelClass::E).empty());
  EXPECT_TRUE(check_assignment(pentagram(), zero, ModelClass::CE).empty());
  EXPECT_THROW(check_assignment(pentagram(), Assignment::uniform(4, kHalf), ModelClass::E), Error);
}

TEST(Assignment, RejectsOutOfRange) {
  EXPECT_THROW(Assignment({Rational(3, 2)}), Error);
  EXPECT_THROW(Assignment({Rational(-1, 2)}), Error);
}

TEST(FindCeViolation, Examples) {
  EXPECT_FALSE(find_ce_violation(pentagon(), Assignment::uniform(5, kHalf)));
  const auto v = find_ce_violation(pentagram(), Assignment::uniform(5, kHalf));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->total, Rational(5, 2));
  EXPECT_THROW(find_ce_violation(pentachoron(), Assignment::uniform(5, kHalf)), Error);
}

TEST(FindCeViolation, PicksLargestTotal) {
  // Two triangles (as pairs only) with different weights.
  const auto c = SimplicialComplex::from_facets(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const Assignment p({kHalf, kHalf, kHalf, Rational(2, 5), Rational(2, 5), Rational(2, 5)});
  const auto v = find_ce_violation(c, p);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->clique, (VertexSet{0, 1, 2}));
  EXPECT_EQ(v->total, Rational(3, 2));
}

TEST(Properties, OracleEquivalenceAndOrdering) {
  for (const auto& c : oracle::oracle_suite(40, 99)) {
    const auto e = e_bound(c);
    const auto ce = ce_bound(c);
    const auto nchv = nchv_bound(c);
    ASSERT_EQ(e.value, oracle::packing_by_vertex_enumeration(c));
    ASSERT_EQ(nchv.value, Rational(static_cast<std::int64_t>(oracle::independence_by_subsets(c))));
    ASSERT_LE(nchv.value, ce.value);
    ASSERT_LE(ce.value, e.value);
    ASSERT_LE(e.value, Rational(static_cast<std::int64_t>(c.n_vertices())));
    ASSERT_TRUE(verify_bound_certificate(c, e).empty());
    ASSERT_TRUE(verify_bound_certificate(clique_complex(c), ce).empty());
    ASSERT_TRUE(check_assignment(c, e.witness, ModelClass::E).empty());
  }
}

TEST(Properties, AddingExclusiveSetsNeverRaisesEBound) {
  const auto base = SimplicialComplex::from_facets(5, {{0, 1}, {2, 3}});
  const auto more = SimplicialComplex::from_facets(5, {{0, 1}, {2, 3}, {1, 2, 4}});
  EXPECT_LE(e_bound(more).value, e_bound(base).value);
  for (const auto& c : oracle::oracle_suite(30, 5)) {
    EXPECT_LE(e_bound(clique_complex(c)).value, e_bound(c).value);
  }
}

TEST(VerifyBoundCertificate, RejectsForeignConstraintSets) {
  auto result = e_bound(pentagon());
  result.certificate->constraint_sets[0] = {0, 2};
  EXPECT_FALSE(verify_bound_certificate(pentagon(), result).empty());
}

}  // namespace
}  // namespace exlab
