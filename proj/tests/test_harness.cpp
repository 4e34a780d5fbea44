#include <gtest/gtest.h>

#include <sstream>

#include "pcdyn/error.hpp"
#include "pcdyn/harness.hpp"
#include "pcdyn/lg_series.hpp"
#include "checks.hpp"
#include "support.hpp"

namespace pcdyn {
namespace {

using testing::kC5;
using testing::kD4;

PresentationPtr shared(const char* text) {
  return std::make_shared<const PcPresentation>(parse_presentation(text));
}

TEST(Harness, Enumerate) {
  EXPECT_EQ(enumerate_group(parse_presentation(kC5)).size(), 5u);
  auto d4 = parse_presentation(kD4);
  auto all = enumerate_group(d4);
  EXPECT_EQ(all.size(), 8u);
  std::set<ExponentVector> s(all.begin(), all.end());
  EXPECT_EQ(s.size(), 8u);
  OpCounter ctr;
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_TRUE(s.count(multiply(d4, a, b, ctr)));
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(element_index(d4, all[i]), i);
  auto c16 = parse_presentation("pcpres 1\nn 4\norders 2 2 2 2\n");
  EXPECT_THROW(enumerate_group(c16, 10), BudgetExceeded);
}

TEST(Harness, BruteOracles) {
  auto d4 = shared(kD4);
  auto c5 = shared(kC5);
  EXPECT_EQ(brute_automorphism_order(PcAutomorphism::identity(d4)), 1);
  EXPECT_EQ(brute_automorphism_order(PcAutomorphism(PcEndomorphism(c5, {{2}}))), 4);
  PcAutomorphism r(PcEndomorphism(d4, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(brute_automorphism_order(r), 2);
  EXPECT_EQ(brute_cycle_length([](const ExponentVector& x) { return x; }, {1, 0, 0}), 1);
  EXPECT_THROW(brute_automorphism_order(r, 4), BudgetExceeded);
}

TEST(Harness, GenericOrder) {
  auto d4 = shared(kD4);
  auto c5 = shared(kC5);
  EXPECT_EQ(generic_order(PcAutomorphism::identity(d4)).order, 1);
  auto g = generic_order(PcAutomorphism(PcEndomorphism(c5, {{2}})));
  EXPECT_EQ(g.order, 4);
  EXPECT_GE(g.iterations, 4u);
  EXPECT_EQ(generic_order(PcAutomorphism(PcEndomorphism(d4, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}))).order, 2);
}

TEST(Harness, CorpusLoadsAndValidates) {
  auto corpus = load_corpus(PCDYN_CORPUS_DIR);
  ASSERT_GE(corpus.size(), 20u);
  for (const auto& e : corpus) {
    EXPECT_EQ(e.pres->group_order(), e.expected_order) << e.name;
    EXPECT_FALSE(e.automorphisms.empty()) << e.name;
    ConsistencyReport rep = check_consistency(*e.pres);
    if (e.pres->group_order() <= kDefaultEnumerationBudget)
      EXPECT_TRUE(rep.passed()) << e.name << ": " << rep.witness;
    else
      EXPECT_EQ(rep.verdict, ConsistencyVerdict::kUnchecked);
  }
  EXPECT_THROW(load_corpus("/nonexistent/corpus"), InputError);
}

TEST(Harness, LgInvariantsOnCorpus) {
  for (const auto& e : load_corpus(PCDYN_CORPUS_DIR)) {
    if (e.pres->size() > 16) continue;
    OpCounter ctr;
    EXPECT_EQ(testing::lg_failure(lg_normalize(e.pres, MultiplyMode::kDirect, ctr)), "")
        << e.name;
  }
}

TEST(Harness, AlgorithmsAgreeOnCorpus) {
  auto corpus = load_corpus(PCDYN_CORPUS_DIR);
  std::vector<CorpusEntry> small;
  for (auto& e : corpus)
    if (e.pres->group_order() <= 1024) small.push_back(e);
  auto rows = run_bench(small);
  EXPECT_FALSE(rows.empty());
  std::ostringstream os;
  write_bench_csv(os, rows);
  EXPECT_EQ(os.str().rfind("group,instance,algorithm,result,mults,wall_ms\n", 0), 0u);
}

TEST(Harness, BenchExamples) {
  auto corpus = load_corpus(PCDYN_CORPUS_DIR);
  EXPECT_TRUE(run_bench({}).empty());
  BenchOptions opt;
  opt.algorithms = {"algo1", "generic"};
  auto c5 = load_corpus_entry(PCDYN_CORPUS_DIR, "C5");
  auto rows = run_bench({c5}, opt);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].result, 4);
  EXPECT_EQ(rows[1].result, 4);

  auto big = load_corpus_entry(PCDYN_CORPUS_DIR, "C10007");
  auto brows = run_bench({big}, opt);
  ASSERT_EQ(brows.size(), 2u);
  EXPECT_EQ(brows[0].result, 10006);
  EXPECT_LT(brows[0].mults, brows[1].mults);

  opt.algorithms = {"nonsense"};
  EXPECT_THROW(run_bench({c5}, opt), InputError);
}

TEST(Harness, CountsAreDeterministic) {
  auto e = load_corpus_entry(PCDYN_CORPUS_DIR, "UT5_2");
  for (const auto& [tag, a] : e.automorphisms) {
    auto r1 = automorphism_order_report(a);
    auto r2 = automorphism_order_report(a);
    EXPECT_EQ(r1.multiplications, r2.multiplications);
    EXPECT_EQ(generic_order(a).multiplications, generic_order(a).multiplications);
  }
}

}  // namespace
}  // namespace pcdyn
