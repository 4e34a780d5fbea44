#include <gtest/gtest.h>

#include <random>

#include "pcdyn/error.hpp"
#include "pcdyn/maps.hpp"
#include "pcdyn/pcgs.hpp"
#include "support.hpp"

namespace pcdyn {
namespace {

using testing::all_elements;
using testing::kC5;
using testing::kD4;
using testing::kQ8;
using testing::kS3;

PresentationPtr shared(const char* text) {
  return std::make_shared<const PcPresentation>(parse_presentation(text));
}

PcAutomorphism conj_by_r(PresentationPtr d4) {
  return PcAutomorphism(PcEndomorphism(d4, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
}

PcAutomorphism c5_square(PresentationPtr c5) {
  return PcAutomorphism(PcEndomorphism(c5, {{2}}));
}

TEST(Maps, ApplyExamples) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  auto c5 = shared(kC5);
  EXPECT_EQ(apply(conj_by_r(d4), {1, 0, 0}, ctr), (ExponentVector{1, 0, 1}));
  for (const auto& g : all_elements(*d4))
    EXPECT_EQ(apply(PcEndomorphism::identity(d4), g, ctr), g);
  EXPECT_EQ(apply(c5_square(c5), {3}, ctr), (ExponentVector{1}));
}

TEST(Maps, RejectsNonHomomorphism) {
  auto d4 = shared(kD4);
  // s -> r does not preserve s^2 = 1.
  EXPECT_THROW(PcEndomorphism(d4, {{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}), InputError);
  EXPECT_THROW(PcEndomorphism(d4, {{1, 0, 0}}), InputError);
  EXPECT_THROW(PcEndomorphism(d4, {{1, 0, 0}, {0, 3, 0}, {0, 0, 1}}), InputError);
}

TEST(Maps, ComposeAndPower) {
  OpCounter ctr;
  auto c5 = shared(kC5);
  auto d4 = shared(kD4);
  auto a = c5_square(c5);
  EXPECT_EQ(compose(a, PcAutomorphism::identity(c5), ctr), a);
  EXPECT_EQ(compose(a, a, ctr).image(0), (ExponentVector{4}));
  EXPECT_EQ(auto_power(a, 1, ctr), a);
  EXPECT_TRUE(auto_power(a, 4, ctr).is_identity());
  EXPECT_TRUE(auto_power(a, 0, ctr).is_identity());

  auto c = conj_by_r(d4);
  auto r2 = inner_automorphism(d4, {0, 0, 1}, ctr);
  auto cc = compose(c, c, ctr);
  auto c2 = auto_power(c, 2, ctr);
  for (const auto& g : all_elements(*d4)) {
    EXPECT_EQ(apply(cc, g, ctr), apply(r2, g, ctr));
    EXPECT_EQ(apply(c2, g, ctr), apply(r2, g, ctr));
  }
}

TEST(Maps, InnerAutomorphisms) {
  OpCounter ctr;
  auto d4 = shared(kD4);
  auto c5 = shared(kC5);
  EXPECT_TRUE(inner_automorphism(d4, d4->identity(), ctr).is_identity());
  EXPECT_EQ(inner_automorphism(d4, {0, 1, 0}, ctr), conj_by_r(d4));
  for (Exponent e = 0; e < 5; ++e)
    EXPECT_TRUE(inner_automorphism(c5, {e}, ctr).is_identity());
  // pointwise h x h^{-1}
  for (auto text : {kD4, kQ8, kS3}) {
    auto p = shared(text);
    for (const auto& h : all_elements(*p)) {
      auto a = inner_automorphism(p, h, ctr);
      ExponentVector hi = inverse(*p, h, ctr);
      for (const auto& x : all_elements(*p))
        EXPECT_EQ(apply(a, x, ctr), multiply(*p, multiply(*p, h, x, ctr), hi, ctr));
    }
  }
}

TEST(Maps, AffineExamples) {
  OpCounter ctr;
  auto c5 = shared(kC5);
  auto d4 = shared(kD4);
  AffineMap id{d4->identity(), PcAutomorphism::identity(d4)};
  for (int k = 1; k < 5; ++k) {
    AffineMap p = affine_power(id, k, ctr);
    EXPECT_TRUE(p.t.is_identity());
    EXPECT_TRUE(p.alpha.is_identity());
  }
  AffineMap tr{{1}, PcAutomorphism::identity(c5)};
  EXPECT_EQ(affine_power(tr, 3, ctr).t, (ExponentVector{3}));
  EXPECT_THROW(affine_power(tr, 0, ctr), InputError);

  AffineMap a1{{0, 0, 1}, PcAutomorphism::identity(d4)};
  AffineMap a2{d4->identity(), conj_by_r(d4)};
  AffineMap c = affine_compose(a1, a2, ctr);
  EXPECT_EQ(c.t, (ExponentVector{0, 0, 1}));
  EXPECT_EQ(c.alpha, conj_by_r(d4));
}

TEST(Maps, AffineLawsExhaustive) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS3}) {
    auto p = shared(text);
    auto elems = all_elements(*p);
    for (const auto& h : elems) {
      AffineMap a1{h, inner_automorphism(p, elems[elems.size() / 2], ctr)};
      AffineMap a2{elems[1], inner_automorphism(p, h, ctr)};
      AffineMap c = affine_compose(a1, a2, ctr);
      for (const auto& g : elems)
        EXPECT_EQ(affine_apply(c, g, ctr),
                  affine_apply(a1, affine_apply(a2, g, ctr), ctr));
      for (int e = 1; e <= 6; ++e) {
        AffineMap pe = affine_power(a1, e, ctr);
        for (const auto& g : elems) {
          ExponentVector x = g;
          for (int k = 0; k < e; ++k) x = affine_apply(a1, x, ctr);
          EXPECT_EQ(affine_apply(pe, g, ctr), x);
        }
      }
    }
  }
}

TEST(Maps, HomomorphismPropertyExhaustive) {
  OpCounter ctr;
  for (auto text : {kD4, kQ8, kS3}) {
    auto p = shared(text);
    auto elems = all_elements(*p);
    for (const auto& h : elems) {
      auto a = inner_automorphism(p, h, ctr);
      for (const auto& x : elems)
        for (const auto& y : elems)
          EXPECT_EQ(apply(a, multiply(*p, x, y, ctr), ctr),
                    multiply(*p, apply(a, x, ctr), apply(a, y, ctr), ctr));
    }
  }
}

TEST(Maps, BijectivityCheck) {
  OpCounter ctr;
  auto c4 = shared(testing::kC4);
  PcEndomorphism sq(c4, {{0, 1}, {0, 0}});
  EXPECT_FALSE(is_bijective(sq, ctr));
  EXPECT_THROW(validate_automorphism(c4, {{0, 1}, {0, 0}}), InputError);
  EXPECT_NO_THROW(validate_automorphism(c4, {{1, 1}, {0, 1}}));
}

TEST(Maps, ParseMapFile) {
  auto d4 = parse_presentation(kD4);
  auto spec = parse_map(
      "# conj by r\nimg 1 = [1,0,1]\nimg 2 = [0,1,0]\nimg 3 = [0,0,1]\nt = [0,0,1]\n", d4);
  ASSERT_EQ(spec.images.size(), 3u);
  EXPECT_EQ(spec.images[0], (ExponentVector{1, 0, 1}));
  ASSERT_TRUE(spec.t.has_value());
  EXPECT_EQ(*spec.t, (ExponentVector{0, 0, 1}));
  auto again = parse_map(format_map(spec.images, spec.t), d4);
  EXPECT_EQ(again.images, spec.images);
  EXPECT_EQ(again.t, spec.t);

  EXPECT_THROW(parse_map("img 1 = [1,0,1]\nimg 2 = [0,1,0]\n", d4), InputError);
  EXPECT_THROW(parse_map("img 4 = [1,0,1]\n", d4), InputError);
  EXPECT_THROW(parse_map("img 1 = [1,0]\nimg 2 = [0,1,0]\nimg 3 = [0,0,1]\n", d4),
               InputError);
  try {
    parse_map("img 1 = [1,0,1]\nbogus\n", d4);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace pcdyn
