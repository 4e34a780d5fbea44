// Multiplicative orders of polynomials and matrices over F_p, and cycle
// lengths of the zero vector under affine maps v -> M v + t.

#ifndef PCDYN_FF_ORDER_HPP_
#define PCDYN_FF_ORDER_HPP_

#include "pcdyn/ff/integer_factor.hpp"
#include "pcdyn/ff/matrix.hpp"
#include "pcdyn/ff/polynomial.hpp"
#include "pcdyn/integer.hpp"

namespace pcdyn {

// An order together with its prime factorisation.
struct FactoredOrder {
  Integer value = 1;
  IntFactorization factors;
};

FactoredOrder lcm(const FactoredOrder& a, const FactoredOrder& b);

// Smallest n >= 1 with X^n = 1 mod f. Requires f(0) != 0; f need not be
// monic (it is normalised first).
FactoredOrder poly_order_factored(const FFPolynomial& f);
Integer poly_order(const FFPolynomial& f);

// Multiplicative order of an invertible matrix. Throws InputError when M is
// singular.
FactoredOrder matrix_order_factored(const FFMatrix& m);
Integer matrix_order(const FFMatrix& m);

// Length of the cycle of 0 under v -> M v + t (M invertible).
FactoredOrder affine_cycle_length_zero_factored(const FFMatrix& m,
                                                const FFVector& t);
Integer affine_cycle_length_zero(const FFMatrix& m, const FFVector& t);

}  // namespace pcdyn

#endif  // PCDYN_FF_ORDER_HPP_
