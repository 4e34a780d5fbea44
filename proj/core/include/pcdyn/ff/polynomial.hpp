// Univariate polynomials over F_p and their factorisation.

#ifndef PCDYN_FF_POLYNOMIAL_HPP_
#define PCDYN_FF_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pcdyn/ff/matrix.hpp"
#include "pcdyn/integer.hpp"

namespace pcdyn {

// Coefficients low degree first, trailing zeros trimmed (zero polynomial is
// empty).
class FFPolynomial {
 public:
  FFPolynomial() = default;
  explicit FFPolynomial(Fp p) : p_(p) {}
  FFPolynomial(Fp p, std::vector<Fp> coeffs);
  static FFPolynomial constant(Fp p, Fp c) { return FFPolynomial(p, {c}); }
  static FFPolynomial x(Fp p) { return FFPolynomial(p, {0, 1}); }
  // a*X + b
  static FFPolynomial linear(Fp p, Fp a, Fp b) { return FFPolynomial(p, {b, a}); }

  Fp modulus() const { return p_; }
  const std::vector<Fp>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Fp coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Fp lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  FFPolynomial monic() const;

  FFPolynomial operator+(const FFPolynomial& b) const;
  FFPolynomial operator-(const FFPolynomial& b) const;
  FFPolynomial operator*(const FFPolynomial& b) const;
  FFPolynomial scaled(Fp s) const;
  // Quotient and remainder; b nonzero.
  std::pair<FFPolynomial, FFPolynomial> divmod(const FFPolynomial& b) const;
  FFPolynomial operator/(const FFPolynomial& b) const { return divmod(b).first; }
  FFPolynomial operator%(const FFPolynomial& b) const { return divmod(b).second; }
  FFPolynomial derivative() const;
  Fp eval(Fp x) const;
  // Evaluate at a square matrix (Horner).
  FFMatrix eval(const FFMatrix& m) const;

  std::string to_string() const;  // "p=2 [1,1,1]"
  friend bool operator==(const FFPolynomial&, const FFPolynomial&) = default;

 private:
  void trim();
  Fp p_ = 2;
  std::vector<Fp> c_;
};

// Monic gcd (zero if both are zero).
FFPolynomial gcd(const FFPolynomial& a, const FFPolynomial& b);
// base^e mod m, e >= 0.
FFPolynomial powmod(const FFPolynomial& base, const Integer& e,
                    const FFPolynomial& m);
FFPolynomial pow(const FFPolynomial& base, unsigned e);

struct PolyFactor {
  FFPolynomial factor;  // monic irreducible
  unsigned multiplicity = 0;
};

struct PolyFactorization {
  Fp p = 2;
  Fp unit = 1;  // leading coefficient of the input
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
};

// Rabin's test; f of positive degree.
bool is_irreducible(const FFPolynomial& f);
// Squarefree decomposition followed by Berlekamp splitting of each part.
PolyFactorization berlekamp_factor(const FFPolynomial& f);
FFPolynomial multiply_out(const PolyFactorization& f);

}  // namespace pcdyn

#endif  // PCDYN_FF_POLYNOMIAL_HPP_
