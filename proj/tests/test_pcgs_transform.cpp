#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "checks.hpp"
#include "pcdyn/consistency.hpp"
#include "pcdyn/error.hpp"
#include "pcdyn/lg_series.hpp"
#include "pcdyn/transform.hpp"
#include "support.hpp"

namespace pcdyn {
namespace {

using testing::all_elements;
using testing::kC3xC3;
using testing::kC5;
using testing::kD4;
using testing::kQ8;
using testing::kS3;

PresentationPtr shared(const char* text) {
  return std::make_shared<const PcPresentation>(parse_presentation(text));
}

// C4 x C2 on (a, a^2, b): the pcgs does not refine the Frattini series.
const char* kC4xC2Mixed = "pcpres 1\nn 3\norders 2 2 2\npow 1 = 2\n";
// C6 with the 3-part first.
const char* kC6Swapped = "pcpres 1\nn 2\norders 3 2\n";
// S4 on (a, b, c, d): a of order 2, b of order 3, <c, d> = V4.
const char* kS4 =
    "pcpres 1\nn 4\norders 2 3 2 2\n"
    "conj 2 1 = 2^2\nconj 3 1 = 3\nconj 4 1 = 3 4\n"
    "conj 3 2 = 4\nconj 4 2 = 3 4\n";

std::set<ExponentVector> subgroup_elements(const PcPresentation& p, const InducedPcgs& h) {
  OpCounter ctr;
  std::set<ExponentVector> out;
  for (const auto& g : all_elements(p))
    if (is_member(Collector(p), h, g, ctr)) out.insert(g);
  return out;
}

// Brute-force closure of a generating set.
std::set<ExponentVector> closure(const PcPresentation& p, const std::vector<ExponentVector>& gens) {
  OpCounter ctr;
  std::set<ExponentVector> s{p.identity()};
  std::vector<ExponentVector> todo{p.identity()};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto y = multiply(p, x, g, ctr);
      if (s.insert(y).second) todo.push_back(y);
    }
  }
  return s;
}

using testing::scramble;

TEST(Pcgs, SiftExamples) {
  OpCounter ctr;
  auto d4 = parse_presentation(kD4);
  Collector m(d4);
  auto r = InducedPcgs::from_entries(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(sift(m, r, {0, 1, 1}, ctr).is_identity());
  EXPECT_EQ(sift(m, InducedPcgs(3), {1, 1, 0}, ctr), (ExponentVector{1, 1, 0}));
  auto r1 = InducedPcgs::from_entries(3, {{0, 1, 0}});
  EXPECT_EQ(sift(m, r1, {1, 0, 0}, ctr), (ExponentVector{1, 0, 0}));
  EXPECT_THROW(InducedPcgs::from_entries(3, {{0, 1, 0}, {0, 1, 1}}), InputError);
}

TEST(Pcgs, InducedExamples) {
  OpCounter ctr;
  auto d4 = parse_presentation(kD4);
  Collector m(d4);
  auto full = induced_pcgs(m, {{1, 0, 0}, {0, 1, 0}}, ctr);
  EXPECT_EQ(full.size(), 3u);
  EXPECT_EQ(full.order(d4), 8);
  EXPECT_TRUE(induced_pcgs(m, {}, ctr).empty());
  auto r = induced_pcgs(m, {{0, 1, 0}}, ctr);
  EXPECT_EQ(r.depths(), (std::vector<std::size_t>{1, 2}));
}

TEST(Pcgs, MembershipExamples) {
  OpCounter ctr;
  auto d4 = parse_presentation(kD4);
  Collector m(d4);
  auto r = induced_pcgs(m, {{0, 1, 0}}, ctr);
  auto z = constructive_membership(m, r, d4.identity(), ctr);
  ASSERT_TRUE(z);
  for (auto e : *z) EXPECT_EQ(e, 0u);
  auto f = constructive_membership(m, r, {0, 1, 1}, ctr);
  ASSERT_TRUE(f);
  EXPECT_EQ(evaluate_exponents(m, r, *f, ctr), (ExponentVector{0, 1, 1}));
  EXPECT_FALSE(constructive_membership(m, r, {1, 0, 0}, ctr));
}

// Every subgroup generated by one or two elements: the induced pcgs has the
// order of the brute-force closure, contains exactly those elements, and
// membership exponents reproduce each element.
TEST(Pcgs, InducedMatchesClosure) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS3, kS4, kC4xC2Mixed}) {
    auto p = parse_presentation(text);
    Collector m(p);
    auto elems = all_elements(p);
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = a; b < elems.size(); b += 3) {
        auto h = induced_pcgs(m, {elems[a], elems[b]}, ctr);
        auto cl = closure(p, {elems[a], elems[b]});
        EXPECT_EQ(h.order(p), Integer(cl.size()));
        EXPECT_EQ(subgroup_elements(p, h), cl);
        for (const auto& g : cl) {
          auto f = constructive_membership(m, h, g, ctr);
          ASSERT_TRUE(f);
          EXPECT_EQ(evaluate_exponents(m, h, *f, ctr), g);
        }
      }
  }
}

TEST(Pcgs, CommutatorSubgroups) {
  OpCounter ctr;
  auto c33 = parse_presentation(kC3xC3);
  EXPECT_TRUE(commutator_subgroup(Collector(c33), full_pcgs(c33), full_pcgs(c33), ctr).empty());
  for (auto text : {kD4, kQ8}) {
    auto p = parse_presentation(text);
    auto d = commutator_subgroup(Collector(p), full_pcgs(p), full_pcgs(p), ctr);
    EXPECT_EQ(d.order(p), 2);
    EXPECT_EQ(d.entries(), (std::vector<ExponentVector>{{0, 0, 1}}));
  }
  auto s4 = parse_presentation(kS4);
  EXPECT_EQ(commutator_subgroup(Collector(s4), full_pcgs(s4), full_pcgs(s4), ctr).order(s4), 12);
}

TEST(Pcgs, NormalClosure) {
  OpCounter ctr;
  auto s4 = parse_presentation(kS4);
  Collector m(s4);
  auto c = induced_pcgs(m, {{0, 0, 1, 0}}, ctr);
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < 4; ++k) gens.push_back(s4.generator(k));
  EXPECT_EQ(normal_closure(m, c, gens, ctr).order(s4), 4);
  auto t = induced_pcgs(m, {{1, 0, 0, 0}}, ctr);
  EXPECT_EQ(normal_closure(m, t, gens, ctr).order(s4), 24);
}

TEST(Transform, ElementaryExamples) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  auto t = elementary_transform(d4, Collector(*d4), {0, 1, 0}, ctr);
  EXPECT_EQ(t.target, d4);
  EXPECT_EQ(t.d, 1u);

  auto c5 = shared(kC5);
  auto u = elementary_transform(c5, Collector(*c5), {2}, ctr);
  EXPECT_EQ(*u.target, *c5);
  EXPECT_EQ(u.iso.forward[0], (ExponentVector{3}));
  EXPECT_EQ(u.iso.backward[0], (ExponentVector{2}));
  EXPECT_TRUE(is_valid_isomorphism(u.iso, ctr));

  auto v = elementary_transform(d4, Collector(*d4), {0, 1, 1}, ctr);
  EXPECT_EQ(check_consistency(*v.target).verdict, ConsistencyVerdict::kPass);
  for (const auto& g : all_elements(*d4))
    EXPECT_EQ(map_backward(v.iso, map_forward(v.iso, g, ctr), ctr), g);
  EXPECT_THROW(elementary_transform(d4, Collector(*d4), d4->identity(), ctr), InputError);
}

TEST(Transform, ReexpressExamples) {
  OpCounter ctr;
  auto c5 = parse_presentation(kC5);
  Collector m(c5);
  EXPECT_EQ(reexpress(m, {2}, {1}, ctr), (ExponentVector{3}));
  EXPECT_EQ(reexpress(m, {2}, {2}, ctr), (ExponentVector{1}));
  EXPECT_EQ(reexpress(m, {2}, {0}, ctr), (ExponentVector{0}));
}

// Re-expressed coordinates evaluate back to h over (x_1..g..x_n).
TEST(Transform, ReexpressRoundTrip) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS3, kS4}) {
    auto p = parse_presentation(text);
    Collector m(p);
    auto elems = all_elements(p);
    for (const auto& g : elems) {
      if (g.is_identity()) continue;
      std::vector<ExponentVector> gens;
      for (std::size_t k = 0; k < p.size(); ++k) gens.push_back(p.generator(k));
      gens[g.depth()] = g;
      for (const auto& h : elems)
        EXPECT_EQ(substitute(m, gens, reexpress(m, g, h, ctr), ctr), h);
    }
  }
}

TEST(Transform, TransformsAreConsistentIsomorphisms) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS3, kS4, kC4xC2Mixed}) {
    auto p = shared(text);
    auto elems = all_elements(*p);
    for (const auto& g : elems) {
      if (g.is_identity()) continue;
      auto t = elementary_transform(p, Collector(*p), g, ctr);
      ASSERT_TRUE(check_consistency(*t.target).passed()) << g.to_string();
      ASSERT_TRUE(is_valid_isomorphism(t.iso, ctr));
      EXPECT_EQ(map_forward(t.iso, g, ctr), t.target->generator(t.d));
      // forward is a homomorphism
      for (const auto& a : elems)
        for (const auto& b : elems)
          ASSERT_EQ(map_forward(t.iso, multiply(*p, a, b, ctr), ctr),
                    multiply(*t.target, map_forward(t.iso, a, ctr),
                             map_forward(t.iso, b, ctr), ctr));
    }
  }
}

TEST(Transform, EmulationExamples) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  auto id = identity_isomorphism(d4);
  EmulatedCollector e(id, ctr);
  for (const auto& a : all_elements(*d4)) {
    EXPECT_EQ(e.multiply(d4->identity(), a, ctr), a);
    for (const auto& b : all_elements(*d4))
      EXPECT_EQ(e.multiply(a, b, ctr), multiply(*d4, a, b, ctr));
  }
  auto t = elementary_transform(d4, Collector(*d4), {0, 1, 1}, ctr);
  EmulatedCollector et(t.iso, ctr);
  for (const auto& a : all_elements(*t.target))
    for (const auto& b : all_elements(*t.target))
      EXPECT_EQ(et.multiply(a, b, ctr), multiply(*t.target, a, b, ctr));
}

TEST(Transform, EmulationOnScrambledPresentations) {
  OpCounter ctr;
  for (auto text : {kQ8, kS4, kC4xC2Mixed}) {
    auto p = shared(text);
    for (unsigned seed = 1; seed <= 3; ++seed) {
      PcgsState st = scramble(p, seed, 6);
      ASSERT_TRUE(is_valid_isomorphism(st.iso, ctr));
      auto em = make_multiplier(MultiplyMode::kEmulate, st.iso, ctr);
      for (const auto& a : all_elements(*st.pres))
        for (const auto& b : all_elements(*st.pres))
          ASSERT_EQ(em->multiply(a, b, ctr), multiply(*st.pres, a, b, ctr));
    }
  }
}

TEST(Transform, PcgsCoordinatesRejectsNonPcgs) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  // r already lies in <s, s r>.
  EXPECT_THROW(PcgsCoordinates(d4, {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, ctr), InvariantError);
}

TEST(Modify, Examples) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  PcgsState st = initial_state(d4);
  PcgsState same = modify_by_element(st, d4->identity(), 2, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(same.pres, d4);
  EXPECT_EQ(same.weights, st.weights);
  PcgsState m = modify_by_element(st, {0, 0, 1}, 2, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(m.pres, d4);
  EXPECT_EQ(m.weights, (std::vector<unsigned>{1, 1, 2}));
  PcgsState again = modify_by_element(m, {0, 0, 1}, 2, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(again.weights, m.weights);
}

TEST(Modify, ExhibitExamples) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  auto st = exhibit_series(d4, {}, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(st.pres, d4);
  EXPECT_EQ(st.weights, (std::vector<unsigned>{1, 1, 1}));
  auto z = InducedPcgs::from_entries(3, {{0, 0, 1}});
  auto s2 = exhibit_series(d4, {z}, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(s2.pres, d4);
  EXPECT_EQ(s2.weights, (std::vector<unsigned>{1, 1, 2}));

  auto q8 = shared(kQ8);
  auto s3 = exhibit_series(q8, {z}, MultiplyMode::kDirect, ctr);
  std::vector<ExponentVector> tail;
  for (std::size_t k = 0; k < 3; ++k)
    if (s3.weights[k] >= 2) tail.push_back(s3.iso.backward[k]);
  EXPECT_EQ(closure(*q8, tail), (std::set<ExponentVector>{{0, 0, 0}, {0, 0, 1}}));
}

// Series exhibited on scrambled pcgs: for each j, the generators of weight
// >= j generate exactly N_j, in both multiplication modes.
TEST(Modify, ExhibitOnScrambledPcgs) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS4, kC4xC2Mixed}) {
    auto base = shared(text);
    for (unsigned seed = 1; seed <= 4; ++seed) {
      PcgsState sc = scramble(base, seed, 5);
      LgSeriesData lg = lg_series(*sc.pres, ctr);
      std::vector<InducedPcgs> series(lg.term_pcgs.begin() + 1, lg.term_pcgs.end() - 1);
      for (auto mode : {MultiplyMode::kDirect, MultiplyMode::kEmulate}) {
        PcgsState st = exhibit_series(sc.pres, series, mode, ctr);
        ASSERT_TRUE(is_valid_isomorphism(st.iso, ctr));
        Collector m(*sc.pres);
        for (std::size_t j = 0; j < lg.r; ++j) {
          std::vector<ExponentVector> gens;
          for (std::size_t k = 0; k < st.weights.size(); ++k) {
            ASSERT_TRUE(is_member(m, lg.term_pcgs[st.weights[k] - 1], st.iso.backward[k], ctr));
            if (st.weights[k] >= j + 1) gens.push_back(st.iso.backward[k]);
          }
          EXPECT_EQ(closure(*sc.pres, gens), subgroup_elements(*sc.pres, lg.term_pcgs[j]));
        }
      }
    }
  }
}

TEST(Lg, SeriesExamples) {
  OpCounter ctr;
  auto c33 = parse_presentation(kC3xC3);
  auto a = lg_series(c33, ctr);
  EXPECT_EQ(a.r, 1u);
  EXPECT_EQ(a.level_dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(a.level_primes, (std::vector<Exponent>{3}));
  for (auto text : {kD4, kQ8}) {
    auto p = parse_presentation(text);
    auto lg = lg_series(p, ctr);
    ASSERT_EQ(lg.r, 2u);
    std::vector<Integer> orders;
    for (const auto& t : lg.term_pcgs) orders.push_back(t.order(p));
    EXPECT_EQ(orders, (std::vector<Integer>{8, 2, 1}));
    EXPECT_EQ(lg.level_dims, (std::vector<std::size_t>{2, 1}));
    EXPECT_EQ(lg.level_primes, (std::vector<Exponent>{2, 2}));
  }
  auto s4 = parse_presentation(kS4);
  auto lg = lg_series(s4, ctr);
  EXPECT_EQ(lg.level_primes, (std::vector<Exponent>{2, 3, 2}));
  EXPECT_EQ(lg.level_dims, (std::vector<std::size_t>{1, 1, 2}));
  auto c6 = parse_presentation(kC6Swapped);
  auto lc = lg_series(c6, ctr);
  EXPECT_EQ(lc.level_primes, (std::vector<Exponent>{2, 3}));
  EXPECT_EQ(lc.final_weights, (std::vector<unsigned>{2, 1}));
}

TEST(Lg, NormalizeExamples) {
  OpCounter ctr;
  auto c33 = shared(kC3xC3);
  auto a = lg_normalize(c33, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(a.pres, c33);
  EXPECT_EQ(a.lg.final_weights, (std::vector<unsigned>{1, 1}));
  auto d4 = shared(kD4);
  auto b = lg_normalize(d4, MultiplyMode::kDirect, ctr);
  EXPECT_EQ(b.pres, d4);
  EXPECT_EQ(b.lg.final_weights, (std::vector<unsigned>{1, 1, 2}));
  auto mixed = shared(kC4xC2Mixed);
  auto c = lg_normalize(mixed, MultiplyMode::kDirect, ctr);
  EXPECT_NE(c.pres, mixed);
  EXPECT_EQ(c.lg.final_weights, (std::vector<unsigned>{1, 1, 2}));
  EXPECT_EQ(testing::lg_failure(c), "");
  auto sw = lg_normalize(shared(kC6Swapped), MultiplyMode::kDirect, ctr);
  EXPECT_EQ(sw.pres->relative_orders(), (std::vector<Exponent>{2, 3}));
}

TEST(Lg, NormalizeInvariantsOnScrambledGroups) {
  OpCounter ctr;
  int changed = 0;
  for (auto text : {kD4, kQ8, kS3, kS4, kC4xC2Mixed, kC6Swapped, kC3xC3}) {
    auto base = shared(text);
    EXPECT_EQ(testing::lg_failure(lg_normalize(base, MultiplyMode::kDirect, ctr)), "");
    for (unsigned seed = 1; seed <= 5; ++seed) {
      PcgsState sc = scramble(base, seed, 6);
      changed += !(*sc.pres == *base);
      for (auto mode : {MultiplyMode::kDirect, MultiplyMode::kEmulate}) {
        auto N = lg_normalize(sc.pres, mode, ctr);
        EXPECT_EQ(testing::lg_failure(N), "") << text << " seed " << seed;
        EXPECT_TRUE(check_consistency(*N.pres).passed());
      }
    }
  }  EXPECT_GT(changed, 5);
}

}  // namespace
}  // namespace pcdyn
