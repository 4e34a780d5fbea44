#ifndef PCDYN_FF_RCF_HPP_
#define PCDYN_FF_RCF_HPP_

#include <vector>

#include "pcdyn/ff/matrix.hpp"
#include "pcdyn/ff/polynomial.hpp"

namespace pcdyn {

// T^{-1} M T = diag(C(f_1), ..., C(f_k)) with f_1 | f_2 | ... | f_k monic of
// positive degree. C(f) is the companion matrix acting as multiplication by X
// on F_p[X]/(f) in the basis 1, X, ..., X^{deg f - 1}.
struct RcfDecomposition {
  FFMatrix T;
  FFMatrix T_inverse;
  std::vector<FFPolynomial> invariant_factors;

  // Offset of block i in the new basis.
  std::size_t block_offset(std::size_t i) const;
};

FFMatrix companion_matrix(const FFPolynomial& f);

// Works for any square M; singular M is accepted here (callers that need
// invertibility check it themselves).
RcfDecomposition rcf(const FFMatrix& m);

}  // namespace pcdyn

#endif  // PCDYN_FF_RCF_HPP_
