#include "pcdyn/lg_series.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pcdyn/error.hpp"

namespace pcdyn {

namespace {

// Primes of |a / b| for b <= a (induced pcgs depths are nested).
std::set<Exponent> factor_primes(const PcPresentation& pres, const InducedPcgs& a,
                                 const InducedPcgs& b) {
  std::set<Exponent> primes;
  for (std::size_t d : a.depths())
    if (!b.at_depth(d)) primes.insert(pres.relative_order(d));
  return primes;
}

InducedPcgs powers_with(const Multiplier& m, const InducedPcgs& base,
                        const InducedPcgs& h, const Integer& e, OpCounter& ctr) {
  std::vector<ExponentVector> gens = base.entries();
  for (const auto& y : h.entries()) gens.push_back(power(m, y, e, ctr));
  return induced_pcgs(m, gens, ctr);
}

}  // namespace

std::size_t LgSeriesData::level_start(std::size_t i) const {
  return std::accumulate(level_dims.begin(), level_dims.begin() + i, std::size_t{0});
}

LgSeriesData lg_series(const PcPresentation& pres, OpCounter& ctr) {
  Collector m(pres);
  const std::size_t n = pres.size();
  const InducedPcgs trivial(n);

  // Lower nilpotent series: each term is the last term of the lower central
  // series of the previous one; a subgroup's order can be read off its
  // induced pcgs, so equal sizes mean the iteration has stabilised.
  std::vector<InducedPcgs> nilpotent{full_pcgs(pres)};
  while (!nilpotent.back().empty()) {
    const InducedPcgs& top = nilpotent.back();
    InducedPcgs gam = top;
    while (true) {
      InducedPcgs next = commutator_subgroup(m, gam, top, ctr);
      if (next.size() == gam.size()) break;
      gam = std::move(next);
    }
    if (gam.size() == top.size()) fail_invariant("group is not solvable");
    nilpotent.push_back(std::move(gam));
  }

  std::vector<InducedPcgs> terms;
  for (std::size_t k = 0; k + 1 < nilpotent.size(); ++k) {
    const InducedPcgs& a = nilpotent[k];
    const InducedPcgs& b = nilpotent[k + 1];
    Integer all_primes = 1;
    for (Exponent q : factor_primes(pres, a, b)) all_primes *= q;
    InducedPcgs lam = a;
    while (lam.size() != b.size()) {
      // next = [lam, a] lam^m b with m the product of the primes of |a/b|
      InducedPcgs comm = commutator_subgroup(m, lam, a, ctr);
      InducedPcgs next = powers_with(m, join(m, comm, b, ctr), lam, all_primes, ctr);
      if (next.size() == lam.size())
        fail_invariant("elementary central refinement did not descend");
      // Split the central factor lam/next into its Sylow parts, smallest
      // prime first.
      Integer mj = 1;
      for (Exponent q : factor_primes(pres, lam, next)) {
        terms.push_back(mj == 1 ? lam : powers_with(m, next, lam, mj, ctr));
        mj *= q;
      }
      lam = std::move(next);
    }
  }
  terms.push_back(trivial);

  LgSeriesData lg;
  lg.r = terms.size() - 1;
  for (std::size_t i = 0; i < lg.r; ++i) {
    auto primes = factor_primes(pres, terms[i], terms[i + 1]);
    if (primes.size() != 1)
      fail_invariant("series factor " + std::to_string(i + 1) + " is not a p-group");
    lg.level_primes.push_back(*primes.begin());
    lg.level_dims.push_back(terms[i].size() - terms[i + 1].size());
  }
  lg.term_pcgs = std::move(terms);
  for (std::size_t k = 0; k < n; ++k) {
    unsigned w = 1;
    for (std::size_t i = 1; i < lg.r; ++i)
      if (is_member(m, lg.term_pcgs[i], pres.generator(k), ctr)) w = static_cast<unsigned>(i + 1);
    lg.final_weights.push_back(w);
  }
  return lg;
}

LgNormalization lg_normalize(PresentationPtr pres, MultiplyMode mode,
                             OpCounter& ctr) {
  const std::size_t n = pres->size();
  Collector m(*pres);
  LgSeriesData lg0 = lg_series(*pres, ctr);
  std::vector<InducedPcgs> series(lg0.term_pcgs.begin() + 1,
                                  lg0.term_pcgs.end() - 1);
  PcgsState st = exhibit_series(pres, series, mode, ctr);
  const std::vector<ExponentVector>& ys = st.iso.backward;

  // Final weights, then a stable sort by weight.
  std::vector<unsigned> w(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 1; i < lg0.r; ++i)
      if (is_member(m, lg0.term_pcgs[i], ys[k], ctr)) w[k] = static_cast<unsigned>(i + 1);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  std::vector<ExponentVector> sorted;
  std::vector<unsigned> sorted_w;
  for (auto i : idx) {
    sorted.push_back(ys[i]);
    sorted_w.push_back(w[i]);
  }

  LgNormalization out;
  bool unchanged = true;
  for (std::size_t i = 0; i < n; ++i) unchanged = unchanged && sorted[i] == pres->generator(i);
  if (unchanged) {
    out.pres = pres;
    out.iso = identity_isomorphism(pres);
  } else {
    PcgsCoordinates pc(pres, sorted, ctr);
    out.pres = std::make_shared<const PcPresentation>(pc.presentation(ctr));
    out.iso.source = pres;
    out.iso.target = out.pres;
    for (std::size_t i = 0; i < n; ++i)
      out.iso.forward.push_back(pc.coordinates_of_member(pres->generator(i), ctr));
    out.iso.backward = sorted;
  }

  out.lg.r = lg0.r;
  out.lg.level_primes = lg0.level_primes;
  out.lg.level_dims = lg0.level_dims;
  out.lg.final_weights = sorted_w;
  for (std::size_t i = 0; i <= lg0.r; ++i) {
    std::size_t start = out.lg.level_start(i);
    std::size_t count = std::count_if(sorted_w.begin(), sorted_w.end(),
                                      [&](unsigned x) { return x >= i + 1; });
    if (i == lg0.r) count = 0;
    if (n - start != count)
      fail_invariant("normalised pcgs does not refine the series at term " +
                     std::to_string(i + 1));
    out.lg.term_pcgs.push_back(InducedPcgs::tail(n, start));
  }
  for (std::size_t i = 0; i < lg0.r; ++i)
    for (std::size_t k = out.lg.level_start(i); k < out.lg.level_start(i + 1); ++k)
      if (out.pres->relative_order(k) != out.lg.level_primes[i])
        fail_invariant("level " + std::to_string(i + 1) + " mixes primes");
  return out;
}

}  // namespace pcdyn
