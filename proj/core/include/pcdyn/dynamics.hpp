// Orders of automorphisms and cycle lengths of bijective affine maps, computed
// level by level along the LG-series, plus preperiods of endomorphisms.

#ifndef PCDYN_DYNAMICS_HPP_
#define PCDYN_DYNAMICS_HPP_

#include <optional>
#include <vector>

#include "pcdyn/ff/matrix.hpp"
#include "pcdyn/ff/order.hpp"
#include "pcdyn/lg_series.hpp"
#include "pcdyn/maps.hpp"

namespace pcdyn {

struct DynamicsOptions {
  MultiplyMode mode = MultiplyMode::kDirect;
  // Check the per-level loop invariants at runtime.
  bool debug_invariants = false;
  // Verify minimality of the result by powering (counted separately).
  bool certify = true;
};

// An automorphism carried over to a presentation whose pcgs refines the
// LG-series.
struct LeveledAutomorphism {
  LgNormalization norm;
  PcAutomorphism alpha_plus;  // on norm.pres
};

LeveledAutomorphism level_automorphism(const PcAutomorphism& alpha,
                                       MultiplyMode mode, OpCounter& ctr);

// Matrix of the action on G_i / G_{i+1} (0-based level i); column k holds the
// level coordinates of the image of the k-th level generator.
FFMatrix level_matrix(const LgSeriesData& lg, const PcEndomorphism& alpha_plus,
                      std::size_t i);
// Level-i coordinates of an element that must lie in G_i.
FFVector level_vector(const LgSeriesData& lg, const ExponentVector& x,
                      std::size_t i);

struct LevelRecord {
  Exponent prime = 0;
  std::size_t dim = 0;
  Integer value = 1;  // o_i for orders, lambda_i for cycle lengths
};

struct DynamicsReport {
  Integer result = 1;
  IntFactorization factors;
  std::vector<LevelRecord> levels;
  std::size_t bumps = 0;  // order only: primes multiplied in after the lcm
  std::uint64_t multiplications = 0;     // everything except certification
  std::uint64_t normalization_multiplications = 0;
  std::uint64_t certification_multiplications = 0;
  bool certified = false;
};

DynamicsReport automorphism_order_report(const PcAutomorphism& alpha,
                                         const DynamicsOptions& opt = {});
Integer automorphism_order(const PcAutomorphism& alpha);

// Length of the cycle of g under x -> t alpha(x).
DynamicsReport affine_cycle_length_report(const AffineMap& a,
                                          const ExponentVector& g,
                                          const DynamicsOptions& opt = {});
Integer affine_cycle_length(const AffineMap& a, const ExponentVector& g);

// alpha^o = id and alpha^(o/q) != id for every prime q | o.
bool certify_order(const PcAutomorphism& alpha, const Integer& o,
                   const IntFactorization& factors, OpCounter& ctr);
// A^l(g) = g and A^(l/q)(g) != g for every prime q | l.
bool certify_cycle_length(const AffineMap& a, const ExponentVector& g,
                          const Integer& l, const IntFactorization& factors,
                          OpCounter& ctr);

// floor(log2 |G|), which bounds every preperiod of an endomorphism.
unsigned preperiod_bound(const PcPresentation& pres);
// Periodic points of phi: the image of phi^b with b = preperiod_bound.
InducedPcgs periodic_subgroup(const PcEndomorphism& phi, OpCounter& ctr);
// Smallest t such that phi^t(g) is periodic.
unsigned endo_preperiod(const PcEndomorphism& phi, const ExponentVector& g,
                        OpCounter& ctr);
unsigned endo_preperiod(const PcEndomorphism& phi, const InducedPcgs& periodic,
                        const ExponentVector& g, OpCounter& ctr);

}  // namespace pcdyn

#endif  // PCDYN_DYNAMICS_HPP_
