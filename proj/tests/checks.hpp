// Checks and fixtures shared by the unit tests and the acceptance program.

#ifndef PCDYN_TESTS_CHECKS_HPP_
#define PCDYN_TESTS_CHECKS_HPP_

#include <random>
#include <string>

#include "pcdyn/lg_series.hpp"

namespace pcdyn::testing {

// Empty string on success, otherwise a description of the first failure.
inline std::string lg_failure(const LgNormalization& N) {
  OpCounter ctr;
  const PcPresentation& P = *N.pres;
  const std::size_t n = P.size();
  const LgSeriesData& lg = N.lg;
  Collector m(P);
  if (!is_valid_isomorphism(N.iso, ctr)) return "isomorphism does not round-trip";
  if (lg.term_pcgs.size() != lg.r + 1) return "wrong number of terms";
  if (lg.level_start(lg.r) != n) return "level dimensions do not sum to n";
  for (std::size_t k = 1; k < n; ++k)
    if (lg.final_weights[k] < lg.final_weights[k - 1]) return "weights not sorted";

  // The series recomputed on the normalised presentation must be its suffixes.
  LgSeriesData fresh = lg_series(P, ctr);
  if (fresh.r != lg.r) return "series length changed under normalisation";
  for (std::size_t i = 0; i <= lg.r; ++i) {
    if (!(fresh.term_pcgs[i] == InducedPcgs::tail(n, lg.level_start(i))))
      return "term " + std::to_string(i + 1) + " is not a pcgs suffix";
    if (!(lg.term_pcgs[i] == fresh.term_pcgs[i]))
      return "term " + std::to_string(i + 1) + " disagrees with recomputation";
  }
  for (std::size_t k = 0; k < n; ++k) {
    unsigned w = lg.final_weights[k];
    if (!is_member(m, lg.term_pcgs[w - 1], P.generator(k), ctr))
      return "weight not admissible";
    if (w < lg.r && is_member(m, lg.term_pcgs[w], P.generator(k), ctr))
      return "weight not maximal";
  }

  for (std::size_t i = 0; i < lg.r; ++i) {
    const InducedPcgs& next = lg.term_pcgs[i + 1];
    const Exponent p = lg.level_primes[i];
    for (std::size_t a = lg.level_start(i); a < lg.level_start(i + 1); ++a) {
      if (P.relative_order(a) != p) return "level prime mismatch";
      ExponentVector ga = P.generator(a);
      if (!is_member(m, next, power(m, ga, p, ctr), ctr))
        return "p-th power escapes the next term at level " + std::to_string(i + 1);
      for (std::size_t b = lg.level_start(i); b < lg.level_start(i + 1); ++b)
        if (!is_member(m, next, commutator(m, ga, P.generator(b), ctr), ctr))
          return "level " + std::to_string(i + 1) + " is not abelian";
    }
    for (const auto& y : lg.term_pcgs[i].entries())
      for (std::size_t x = 0; x < n; ++x)
        if (!is_member(m, lg.term_pcgs[i], conjugate(m, y, P.generator(x), ctr), ctr))
          return "term " + std::to_string(i + 1) + " is not normal";
  }
  return {};
}

// A random pcgs of the same group, reached by a chain of elementary
// transforms by random elements.
inline PcgsState scramble(PresentationPtr base, unsigned seed, int steps) {
  OpCounter ctr;
  std::mt19937 rng(seed);
  PcgsState st = initial_state(base);
  for (int s = 0; s < steps; ++s) {
    ExponentVector g(base->size());
    while (g.is_identity())
      for (std::size_t k = 0; k < g.size(); ++k)
        g[k] = static_cast<Exponent>(rng() % base->relative_order(k));
    Collector m(*st.pres);
    ElementaryTransform t = elementary_transform(st.pres, m, g, ctr);
    st.iso = compose(st.iso, t.iso, ctr);
    st.pres = t.target;
  }
  return st;
}

}  // namespace pcdyn::testing

#endif  // PCDYN_TESTS_CHECKS_HPP_
