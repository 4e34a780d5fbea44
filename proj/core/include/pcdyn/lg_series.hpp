// The characteristic series with elementary abelian factors used by the
// dynamics algorithms (lower nilpotent series, refined by lower
// elementary-central series and split into Sylow parts), and the
// normalisation of a presentation to a pcgs refining it.

#ifndef PCDYN_LG_SERIES_HPP_
#define PCDYN_LG_SERIES_HPP_

#include <vector>

#include "pcdyn/pcgs.hpp"
#include "pcdyn/transform.hpp"

namespace pcdyn {

struct LgSeriesData {
  std::size_t r = 0;                     // number of factors
  std::vector<Exponent> level_primes;    // p_1..p_r
  std::vector<std::size_t> level_dims;   // l_1..l_r
  std::vector<InducedPcgs> term_pcgs;    // G_1..G_{r+1}, G_{r+1} trivial
  std::vector<unsigned> final_weights;   // per pcgs generator: max{i : y in G_i}

  // Index of the first generator of level i (0-based) once the pcgs refines
  // the series, i.e. L(i) in 0-based form.
  std::size_t level_start(std::size_t i) const;
};

// Series of P computed in P's own coordinates. final_weights refer to P's
// generators.
LgSeriesData lg_series(const PcPresentation& pres, OpCounter& ctr);

struct LgNormalization {
  PresentationPtr pres;  // pcgs refines the series, weights non-decreasing
  PcIsomorphism iso;     // input -> pres
  LgSeriesData lg;       // in pres coordinates: term i is a pcgs suffix
};

LgNormalization lg_normalize(PresentationPtr pres, MultiplyMode mode,
                             OpCounter& ctr);

}  // namespace pcdyn

#endif  // PCDYN_LG_SERIES_HPP_
