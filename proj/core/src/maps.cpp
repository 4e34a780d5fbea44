#include "pcdyn/maps.hpp"

#include "pcdyn/error.hpp"
#include "text_util.hpp"

namespace pcdyn {

bool preserves_relations(const Multiplier& m,
                         const std::vector<ExponentVector>& images,
                         OpCounter& ctr, std::string* failure) {
  const PcPresentation& pres = m.presentation();
  const std::size_t n = pres.size();
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  if (images.size() != n)
    return fail("expected " + std::to_string(n) + " images, got " +
                std::to_string(images.size()));
  for (std::size_t i = 0; i < n; ++i)
    if (!pres.is_valid(images[i]))
      return fail("image of x" + std::to_string(i + 1) + " is not a normal form");
  for (std::size_t i = 0; i < n; ++i) {
    auto lhs = power(m, images[i], pres.relative_order(i), ctr);
    auto rhs = substitute(m, images, pres.power_relation(i), ctr);
    if (lhs != rhs)
      return fail("power relation of x" + std::to_string(i + 1) + " not preserved");
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto lhs = conjugate(m, images[j], images[i], ctr);
      auto rhs = substitute(m, images, pres.conjugate_relation(j, i), ctr);
      if (lhs != rhs)
        return fail("conjugate relation x" + std::to_string(j + 1) + "^x" +
                    std::to_string(i + 1) + " not preserved");
    }
  return true;
}

PcEndomorphism::PcEndomorphism(PresentationPtr pres,
                               std::vector<ExponentVector> images)
    : PcEndomorphism(pres, std::move(images), Collector(*pres)) {}

PcEndomorphism::PcEndomorphism(PresentationPtr pres,
                               std::vector<ExponentVector> images,
                               const Multiplier& m)
    : pres_(std::move(pres)), images_(std::move(images)) {
  OpCounter ctr;
  std::string why;
  if (!preserves_relations(m, images_, ctr, &why))
    throw InputError("not a homomorphism: " + why);
}

PcEndomorphism PcEndomorphism::identity(PresentationPtr pres) {
  std::vector<ExponentVector> im;
  for (std::size_t i = 0; i < pres->size(); ++i) im.push_back(pres->generator(i));
  return PcEndomorphism(Trusted{}, std::move(pres), std::move(im));
}

PcEndomorphism PcEndomorphism::trusted(PresentationPtr pres,
                                       std::vector<ExponentVector> images) {
  return PcEndomorphism(Trusted{}, std::move(pres), std::move(images));
}

bool PcEndomorphism::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != pres_->generator(i)) return false;
  return true;
}

ExponentVector apply(const Multiplier& m, const PcEndomorphism& f,
                     const ExponentVector& g, OpCounter& ctr) {
  return substitute(m, f.images(), g, ctr);
}

ExponentVector apply(const PcEndomorphism& f, const ExponentVector& g,
                     OpCounter& ctr) {
  return apply(Collector(f.presentation()), f, g, ctr);
}

PcEndomorphism compose(const Multiplier& m, const PcEndomorphism& a1,
                       const PcEndomorphism& a2, OpCounter& ctr) {
  std::vector<ExponentVector> im;
  im.reserve(a2.images().size());
  for (const auto& x : a2.images()) im.push_back(apply(m, a1, x, ctr));
  return PcEndomorphism::trusted(a1.presentation_ptr(), std::move(im));
}

PcAutomorphism compose(const Multiplier& m, const PcAutomorphism& a1,
                       const PcAutomorphism& a2, OpCounter& ctr) {
  return PcAutomorphism(compose(m, static_cast<const PcEndomorphism&>(a1),
                                static_cast<const PcEndomorphism&>(a2), ctr));
}

PcEndomorphism compose(const PcEndomorphism& a1, const PcEndomorphism& a2,
                       OpCounter& ctr) {
  return compose(Collector(a1.presentation()), a1, a2, ctr);
}

PcAutomorphism compose(const PcAutomorphism& a1, const PcAutomorphism& a2,
                       OpCounter& ctr) {
  return compose(Collector(a1.presentation()), a1, a2, ctr);
}

PcEndomorphism endo_power(const Multiplier& m, const PcEndomorphism& a,
                          const Integer& e, OpCounter& ctr) {
  if (e < 0) throw InputError("negative map exponent");
  PcEndomorphism result = PcEndomorphism::identity(a.presentation_ptr());
  if (e == 0) return result;
  PcEndomorphism base = a;
  bool have = false;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = 0; i <= bits; ++i) {
    if (boost::multiprecision::bit_test(e, i)) {
      result = have ? compose(m, result, base, ctr) : base;
      have = true;
    }
    if (i < bits) base = compose(m, base, base, ctr);
  }
  return result;
}

PcAutomorphism auto_power(const Multiplier& m, const PcAutomorphism& a,
                          const Integer& e, OpCounter& ctr) {
  return PcAutomorphism(endo_power(m, a, e, ctr));
}

PcAutomorphism auto_power(const PcAutomorphism& a, const Integer& e,
                          OpCounter& ctr) {
  return auto_power(Collector(a.presentation()), a, e, ctr);
}

ExponentVector affine_apply(const Multiplier& m, const AffineMap& a,
                            const ExponentVector& g, OpCounter& ctr) {
  ExponentVector x = apply(m, a.alpha, g, ctr);
  if (a.t.is_identity()) return x;
  return m.multiply(a.t, x, ctr);
}

ExponentVector affine_apply(const AffineMap& a, const ExponentVector& g,
                            OpCounter& ctr) {
  return affine_apply(Collector(a.alpha.presentation()), a, g, ctr);
}

AffineMap affine_compose(const Multiplier& m, const AffineMap& a1,
                         const AffineMap& a2, OpCounter& ctr) {
  return {affine_apply(m, a1, a2.t, ctr), compose(m, a1.alpha, a2.alpha, ctr)};
}

AffineMap affine_compose(const AffineMap& a1, const AffineMap& a2,
                         OpCounter& ctr) {
  return affine_compose(Collector(a1.alpha.presentation()), a1, a2, ctr);
}

AffineMap affine_power(const Multiplier& m, const AffineMap& a,
                       const Integer& e, OpCounter& ctr) {
  if (e < 1) throw InputError("affine maps are powered with exponents >= 1");
  AffineMap base = a;
  std::optional<AffineMap> result;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = 0; i <= bits; ++i) {
    if (boost::multiprecision::bit_test(e, i))
      result = result ? affine_compose(m, *result, base, ctr) : base;
    if (i < bits) base = affine_compose(m, base, base, ctr);
  }
  return *result;
}

AffineMap affine_power(const AffineMap& a, const Integer& e, OpCounter& ctr) {
  return affine_power(Collector(a.alpha.presentation()), a, e, ctr);
}

PcAutomorphism inner_automorphism(const Multiplier& m, PresentationPtr pres,
                                  const ExponentVector& h, OpCounter& ctr) {
  pres->check_element(h);
  ExponentVector hi = inverse(m, h, ctr);
  std::vector<ExponentVector> im;
  for (std::size_t i = 0; i < pres->size(); ++i)
    im.push_back(conjugate(m, pres->generator(i), hi, ctr));
  return PcAutomorphism::trusted(std::move(pres), std::move(im));
}

PcAutomorphism inner_automorphism(PresentationPtr pres, const ExponentVector& h,
                                  OpCounter& ctr) {
  Collector c(*pres);
  return inner_automorphism(c, std::move(pres), h, ctr);
}

MapSpec parse_map(std::string_view text, const PcPresentation& pres) {
  const std::size_t n = pres.size();
  MapSpec spec;
  std::vector<std::optional<ExponentVector>> im(n);
  for (auto [lineno, body] : txt::logical_lines(text)) {
    auto eq = body.find('=');
    if (eq == std::string_view::npos) txt::parse_fail(lineno, "expected '='");
    auto lhs = txt::split_ws(body.substr(0, eq));
    ExponentVector v;
    try {
      v = ExponentVector::parse(body.substr(eq + 1));
      pres.check_element(v);
    } catch (const InputError& e) {
      txt::parse_fail(lineno, e.what());
    }
    if (lhs.size() == 1 && lhs[0] == "t") {
      if (spec.t) txt::parse_fail(lineno, "duplicate t line");
      spec.t = v;
    } else if (lhs.size() == 2 && lhs[0] == "img") {
      std::size_t i{};
      if (!txt::parse_number(lhs[1], i) || i < 1 || i > n)
        txt::parse_fail(lineno, "generator index out of range in img");
      if (im[i - 1]) txt::parse_fail(lineno, "duplicate img line");
      im[i - 1] = v;
    } else {
      txt::parse_fail(lineno, "unrecognised map line");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!im[i]) throw InputError("missing image of generator " + std::to_string(i + 1));
    spec.images.push_back(*im[i]);
  }
  return spec;
}

MapSpec load_map(const std::string& path, const PcPresentation& pres) {
  std::string body = txt::read_file(path);
  try {
    return parse_map(body, pres);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_map(const std::vector<ExponentVector>& images,
                       const std::optional<ExponentVector>& t) {
  std::string s;
  for (std::size_t i = 0; i < images.size(); ++i)
    s += "img " + std::to_string(i + 1) + " = " + images[i].to_string() + "\n";
  if (t) s += "t = " + t->to_string() + "\n";
  return s;
}

}  // namespace pcdyn
