#include <random>

#include <gtest/gtest.h>

#include "pcdyn/collector.hpp"
#include "pcdyn/consistency.hpp"
#include "pcdyn/error.hpp"
#include "pcdyn/presentation.hpp"
#include "support.hpp"

using namespace pcdyn;
using pcdyn::testing::pres;

namespace {

ExponentVector V(std::initializer_list<Exponent> e) { return ExponentVector(e); }

}  // namespace

TEST(Parse, CyclicOfOrderFive) {
  auto p = pres(pcdyn::testing::kC5);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.relative_order(0), 5u);
  EXPECT_EQ(p.group_order(), 5);
}

TEST(Parse, DihedralHasOneConjugateRelation) {
  auto p = pres(pcdyn::testing::kD4);
  EXPECT_EQ(p.size(), 3u);
  int nontrivial = 0;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < j; ++i) nontrivial += !p.conjugate_is_trivial(j, i);
  EXPECT_EQ(nontrivial, 1);
  EXPECT_EQ(p.power_relation(1), V({0, 0, 1}));
}

TEST(Parse, RejectsCompositeOrder) {
  try {
    parse_presentation("pcpres 1\nn 1\norders 4\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("relative order not prime"), std::string::npos);
  }
}

TEST(Parse, SyntaxErrorsCarryLineNumbers) {
  try {
    parse_presentation("pcpres 1\nn 2\norders 2 2\npow 1 = 2^x\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(Parse, RejectsOutOfRangeGenerator) {
  EXPECT_THROW(parse_presentation("pcpres 1\nn 2\norders 2 2\npow 1 = 3\n"), InputError);
  EXPECT_THROW(parse_presentation("pcpres 1\nn 2\norders 2 2\npow 2 = 1\n"), InputError);
  EXPECT_THROW(parse_presentation("pcpres 1\nn 3\norders 2 2 2\nconj 3 1 = 1\n"), InputError);
}

TEST(Parse, FormatRoundTrips) {
  for (const char* t : {pcdyn::testing::kD4, pcdyn::testing::kQ8, pcdyn::testing::kS3}) {
    auto p = pres(t);
    EXPECT_EQ(parse_presentation(format_presentation(p)), p);
  }
}

TEST(ExponentVectorText, ParseAndPrint) {
  auto v = ExponentVector::parse("[1, 0,2]");
  EXPECT_EQ(v, V({1, 0, 2}));
  EXPECT_EQ(v.to_string(), "[1,0,2]");
  EXPECT_THROW(ExponentVector::parse("1,2"), InputError);
}

TEST(Consistency, DihedralPasses) {
  auto r = check_consistency(pres(pcdyn::testing::kD4));
  EXPECT_EQ(r.verdict, ConsistencyVerdict::kPass);
  EXPECT_EQ(r.elements, 8u);
}

TEST(Consistency, DirectProductPasses) {
  auto r = check_consistency(parse_presentation("pcpres 1\nn 2\norders 2 3\n"));
  EXPECT_EQ(r.verdict, ConsistencyVerdict::kPass);
  EXPECT_EQ(r.elements, 6u);
}

TEST(Consistency, AbelianisedDihedralRelationsStillDefineAGroupOfOrderEight) {
  // Dropping the nontrivial conjugate relation leaves C2 x C4, which is a
  // consistent presentation in its own right.
  auto r = check_consistency(
      parse_presentation("pcpres 1\nn 3\norders 2 2 2\npow 2 = 3\n"));
  EXPECT_EQ(r.verdict, ConsistencyVerdict::kPass);
}

TEST(Consistency, InconsistentPresentationFails) {
  // x1^2 = x2 forces x2 to commute with x1, contradicting x2^x1 = x2^2.
  auto r = check_consistency(
      parse_presentation("pcpres 1\nn 2\norders 2 3\npow 1 = 2\nconj 2 1 = 2^2\n"));
  EXPECT_EQ(r.verdict, ConsistencyVerdict::kFail);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Consistency, BudgetGivesUnchecked) {
  auto r = check_consistency(pres(pcdyn::testing::kD4), 4);
  EXPECT_EQ(r.verdict, ConsistencyVerdict::kUnchecked);
}

TEST(Arithmetic, DihedralExamples) {
  auto p = pres(pcdyn::testing::kD4);
  OpCounter c;
  EXPECT_EQ(multiply(p, V({0, 1, 0}), V({1, 0, 0}), c), V({1, 1, 1}));
  EXPECT_EQ(c.multiplications, 1u);
  EXPECT_EQ(inverse(p, V({1, 1, 0}), c), V({1, 1, 0}));
  EXPECT_EQ(power(p, V({0, 1, 0}), 2, c), V({0, 0, 1}));
  EXPECT_EQ(commutator(p, V({1, 0, 0}), V({0, 1, 0}), c), V({0, 0, 1}));
  EXPECT_EQ(depth(V({0, 0, 1})), 2u);  // third generator, 0-based
  EXPECT_EQ(inverse(p, p.identity(), c), p.identity());
}

TEST(Arithmetic, CyclicExamples) {
  auto p = pres(pcdyn::testing::kC5);
  OpCounter c;
  EXPECT_EQ(multiply(p, V({3}), V({4}), c), V({2}));
  EXPECT_EQ(inverse(p, V({2}), c), V({3}));
  EXPECT_EQ(power(p, V({2}), -1, c), V({3}));
  EXPECT_EQ(power(p, V({2}), 0, c), V({0}));
  EXPECT_EQ(evaluate_word(p, Word{{{0, 7}}}, c), V({2}));
  EXPECT_EQ(evaluate_word(p, Word{{{0, -1}}}, c), V({4}));
}

TEST(Arithmetic, CounterCountsCalls) {
  auto p = pres(pcdyn::testing::kQ8);
  OpCounter a, b;
  Collector coll(p);
  for (auto& x : pcdyn::testing::all_elements(p)) {
    coll.multiply(x, x, a);
    coll.multiply(x, x, b);
  }
  EXPECT_EQ(a.multiplications, 8u);
  EXPECT_EQ(a.multiplications, b.multiplications);
  EXPECT_EQ(a.bit_ops_estimate, b.bit_ops_estimate);
}

class SmallGroups : public ::testing::TestWithParam<const char*> {};

TEST_P(SmallGroups, GroupAxiomsExhaustive) {
  auto p = pres(GetParam());
  auto els = pcdyn::testing::all_elements(p);
  OpCounter c;
  for (auto& a : els) {
    EXPECT_EQ(multiply(p, a, p.identity(), c), a);
    EXPECT_EQ(multiply(p, p.identity(), a, c), a);
    EXPECT_EQ(multiply(p, a, inverse(p, a, c), c), p.identity());
    ExponentVector acc = p.identity();
    for (int e = 0; e <= 20; ++e) {
      EXPECT_EQ(power(p, a, e, c), acc);
      acc = multiply(p, acc, a, c);
    }
    for (auto& b : els) {
      auto ab = multiply(p, a, b, c);
      EXPECT_TRUE(p.is_valid(ab));
      for (auto& d : els)
        ASSERT_EQ(multiply(p, ab, d, c), multiply(p, a, multiply(p, b, d, c), c));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Presentations, SmallGroups,
                         ::testing::Values(pcdyn::testing::kC5, pcdyn::testing::kC4,
                                           pcdyn::testing::kD4, pcdyn::testing::kQ8,
                                           pcdyn::testing::kS3, pcdyn::testing::kC3xC3));
