#include "pcdyn/dynamics.hpp"

#include <boost/multiprecision/integer.hpp>

#include "pcdyn/error.hpp"

namespace pcdyn {

namespace {

void check_filtration(const LgSeriesData& lg, const PcEndomorphism& a) {
  for (std::size_t i = 0; i < lg.r; ++i)
    for (std::size_t k = lg.level_start(i); k < lg.level_start(i + 1); ++k)
      if (a.image(k).depth() < lg.level_start(i))
        fail_invariant("automorphism does not preserve series term " +
                       std::to_string(i + 1));
}

}  // namespace

LeveledAutomorphism level_automorphism(const PcAutomorphism& alpha,
                                       MultiplyMode mode, OpCounter& ctr) {
  const PresentationPtr& base = alpha.presentation_ptr();
  LgNormalization norm = lg_normalize(base, mode, ctr);
  if (norm.pres == base) return {std::move(norm), alpha};

  Collector bm(*base);
  auto tm = make_multiplier(mode, norm.iso, ctr);
  std::vector<ExponentVector> images;
  for (const auto& y : norm.iso.backward)
    images.push_back(map_forward(*tm, norm.iso, apply(bm, alpha, y, ctr), ctr));
  PcAutomorphism plus = PcAutomorphism::trusted(norm.pres, std::move(images));
  return {std::move(norm), std::move(plus)};
}

FFMatrix level_matrix(const LgSeriesData& lg, const PcEndomorphism& alpha_plus,
                      std::size_t i) {
  const std::size_t lo = lg.level_start(i), dim = lg.level_dims[i];
  const Exponent p = lg.level_primes[i];
  FFMatrix m(p, dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const ExponentVector& img = alpha_plus.image(lo + k);
    if (img.depth() < lo)
      fail_invariant("image of a level generator leaves its series term");
    for (std::size_t j = 0; j < dim; ++j) m(j, k) = img[lo + j];
  }
  return m;
}

FFVector level_vector(const LgSeriesData& lg, const ExponentVector& x,
                      std::size_t i) {
  const std::size_t lo = lg.level_start(i), dim = lg.level_dims[i];
  if (x.depth() < lo)
    fail_invariant("element expected in series term " + std::to_string(i + 1));
  FFVector v = FFVector::zero(lg.level_primes[i], dim);
  for (std::size_t j = 0; j < dim; ++j) v.v[j] = x[lo + j];
  return v;
}

DynamicsReport automorphism_order_report(const PcAutomorphism& alpha,
                                         const DynamicsOptions& opt) {
  DynamicsReport rep;
  OpCounter ctr;
  LeveledAutomorphism la = level_automorphism(alpha, opt.mode, ctr);
  rep.normalization_multiplications = ctr.multiplications;
  const LgSeriesData& lg = la.norm.lg;
  auto mult = make_multiplier(opt.mode, la.norm.iso, ctr);
  if (opt.debug_invariants) check_filtration(lg, la.alpha_plus);

  FactoredOrder o;
  for (std::size_t i = 0; i < lg.r; ++i) {
    FFMatrix m = level_matrix(lg, la.alpha_plus, i);
    if (!m.invertible())
      fail_invariant("level matrix " + std::to_string(i + 1) + " is singular");
    FactoredOrder oi = matrix_order_factored(m);
    rep.levels.push_back({lg.level_primes[i], lg.level_dims[i], oi.value});
    o = lcm(o, oi);
  }

  PcAutomorphism beta = auto_power(*mult, la.alpha_plus, o.value, ctr);
  if (opt.debug_invariants)
    for (std::size_t i = 0; i < lg.r; ++i)
      if (!level_matrix(lg, beta, i).is_identity())
        fail_invariant("power by the lcm acts nontrivially on level " +
                       std::to_string(i + 1));

  // beta is trivial on every factor; it stays trivial modulo G_{i+2} unless
  // some generator above level i+1 picks up level-(i+1) coordinates, and then
  // its order there is exactly p_{i+1}.
  for (std::size_t i = 0; i + 1 < lg.r; ++i) {
    const std::size_t lo = lg.level_start(i + 1), hi = lg.level_start(i + 2);
    bool moved = false;
    for (std::size_t j = 0; j < lo && !moved; ++j)
      for (std::size_t k = lo; k < hi && !moved; ++k) moved = beta.image(j)[k] != 0;
    if (!moved) continue;
    const Exponent p = lg.level_primes[i + 1];
    o.value *= p;
    merge_factors(o.factors, {{Integer(p), 1}});
    beta = auto_power(*mult, beta, p, ctr);
    ++rep.bumps;
  }
  if (!beta.is_identity())
    fail_invariant("automorphism raised to the computed order is not the identity");

  rep.result = o.value;
  rep.factors = o.factors;
  rep.multiplications = ctr.multiplications;
  if (opt.certify) {
    OpCounter cc;
    rep.certified = certify_order(alpha, o.value, o.factors, cc);
    rep.certification_multiplications = cc.multiplications;
    if (!rep.certified) fail_invariant("computed order failed certification");
  }
  return rep;
}

Integer automorphism_order(const PcAutomorphism& alpha) {
  DynamicsOptions opt;
  opt.certify = false;
  return automorphism_order_report(alpha, opt).result;
}

DynamicsReport affine_cycle_length_report(const AffineMap& a,
                                          const ExponentVector& g,
                                          const DynamicsOptions& opt) {
  a.alpha.presentation().check_element(a.t);
  a.alpha.presentation().check_element(g);
  DynamicsReport rep;
  OpCounter ctr;
  LeveledAutomorphism la = level_automorphism(a.alpha, opt.mode, ctr);
  rep.normalization_multiplications = ctr.multiplications;
  const LgSeriesData& lg = la.norm.lg;
  auto mult = make_multiplier(opt.mode, la.norm.iso, ctr);
  if (opt.debug_invariants) check_filtration(lg, la.alpha_plus);

  AffineMap A{map_forward(*mult, la.norm.iso, a.t, ctr), la.alpha_plus};
  const ExponentVector gp = map_forward(*mult, la.norm.iso, g, ctr);
  const ExponentVector gi = inverse(*mult, gp, ctr);

  FactoredOrder lambda;
  for (std::size_t i = 0; i < lg.r; ++i) {
    // g^{-1} A(g) lies in G_i; its level-i part is the translation of the
    // induced affine map on G_i / G_{i+1}.
    ExponentVector x = mult->multiply(gi, affine_apply(*mult, A, gp, ctr), ctr);
    FFVector u = level_vector(lg, x, i);
    FFMatrix m = level_matrix(lg, A.alpha, i);
    if (!m.invertible())
      fail_invariant("level matrix " + std::to_string(i + 1) + " is singular");
    FactoredOrder li = affine_cycle_length_zero_factored(m, u);
    rep.levels.push_back({lg.level_primes[i], lg.level_dims[i], li.value});
    lambda.value *= li.value;
    merge_factors(lambda.factors, li.factors);
    if (li.value != 1 && (i + 1 < lg.r || opt.debug_invariants))
      A = affine_power(*mult, A, li.value, ctr);
  }
  if (opt.debug_invariants && lg.r > 0 && affine_apply(*mult, A, gp, ctr) != gp)
    fail_invariant("element is not fixed by the map raised to its cycle length");

  rep.result = lambda.value;
  rep.factors = lambda.factors;
  rep.multiplications = ctr.multiplications;
  if (opt.certify) {
    OpCounter cc;
    rep.certified = certify_cycle_length(a, g, lambda.value, lambda.factors, cc);
    rep.certification_multiplications = cc.multiplications;
    if (!rep.certified) fail_invariant("computed cycle length failed certification");
  }
  return rep;
}

Integer affine_cycle_length(const AffineMap& a, const ExponentVector& g) {
  DynamicsOptions opt;
  opt.certify = false;
  return affine_cycle_length_report(a, g, opt).result;
}

bool certify_order(const PcAutomorphism& alpha, const Integer& o,
                   const IntFactorization& factors, OpCounter& ctr) {
  if (o < 1 || multiply_out(factors) != o) return false;
  Collector m(alpha.presentation());
  if (!auto_power(m, alpha, o, ctr).is_identity()) return false;
  for (const auto& f : factors)
    if (auto_power(m, alpha, o / f.prime, ctr).is_identity()) return false;
  return true;
}

bool certify_cycle_length(const AffineMap& a, const ExponentVector& g,
                          const Integer& l, const IntFactorization& factors,
                          OpCounter& ctr) {
  if (l < 1 || multiply_out(factors) != l) return false;
  Collector m(a.alpha.presentation());
  if (affine_apply(m, affine_power(m, a, l, ctr), g, ctr) != g) return false;
  for (const auto& f : factors)
    if (affine_apply(m, affine_power(m, a, l / f.prime, ctr), g, ctr) == g)
      return false;
  return true;
}

unsigned preperiod_bound(const PcPresentation& pres) {
  return static_cast<unsigned>(boost::multiprecision::msb(pres.group_order()));
}

InducedPcgs periodic_subgroup(const PcEndomorphism& phi, OpCounter& ctr) {
  Collector m(phi.presentation());
  PcEndomorphism f = endo_power(m, phi, preperiod_bound(phi.presentation()), ctr);
  return induced_pcgs(m, f.images(), ctr);
}

unsigned endo_preperiod(const PcEndomorphism& phi, const InducedPcgs& periodic,
                        const ExponentVector& g, OpCounter& ctr) {
  phi.presentation().check_element(g);
  Collector m(phi.presentation());
  const unsigned bound = preperiod_bound(phi.presentation());
  ExponentVector x = g;
  for (unsigned t = 0; t <= bound; ++t) {
    if (is_member(m, periodic, x, ctr)) return t;
    x = apply(m, phi, x, ctr);
  }
  fail_invariant("preperiod exceeds floor(log2 |G|)");
}

unsigned endo_preperiod(const PcEndomorphism& phi, const ExponentVector& g,
                        OpCounter& ctr) {
  return endo_preperiod(phi, periodic_subgroup(phi, ctr), g, ctr);
}

}  // namespace pcdyn
