// Vectors and matrices over a prime field F_p (p < 2^32).

#ifndef PCDYN_FF_MATRIX_HPP_
#define PCDYN_FF_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcdyn/integer.hpp"

namespace pcdyn {

using Fp = std::uint64_t;

namespace fp {
inline Fp add(Fp a, Fp b, Fp p) { return (a + b) % p; }
inline Fp sub(Fp a, Fp b, Fp p) { return (a + p - b) % p; }
inline Fp mul(Fp a, Fp b, Fp p) { return a * b % p; }
inline Fp neg(Fp a, Fp p) { return a == 0 ? 0 : p - a; }
Fp pow(Fp a, std::uint64_t e, Fp p);
// a != 0
Fp inv(Fp a, Fp p);
}  // namespace fp

struct FFVector {
  Fp p = 2;
  std::vector<Fp> v;

  FFVector() = default;
  static FFVector zero(Fp modulus, std::size_t n) {
    FFVector z;
    z.p = modulus;
    z.v.assign(n, 0);
    return z;
  }
  FFVector(Fp modulus, std::vector<Fp> values);

  std::size_t size() const { return v.size(); }
  Fp operator[](std::size_t i) const { return v[i]; }
  Fp& operator[](std::size_t i) { return v[i]; }
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const FFVector&, const FFVector&) = default;
};

class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(Fp p, std::size_t rows, std::size_t cols);
  // Rows given explicitly; entries are reduced mod p.
  FFMatrix(Fp p, const std::vector<std::vector<Fp>>& rows);
  static FFMatrix identity(Fp p, std::size_t n);

  Fp modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Fp operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Fp& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  FFVector column(std::size_t j) const;
  void set_column(std::size_t j, const FFVector& c);

  FFMatrix operator*(const FFMatrix& b) const;
  FFVector operator*(const FFVector& x) const;
  FFMatrix operator+(const FFMatrix& b) const;
  FFMatrix operator-(const FFMatrix& b) const;
  FFMatrix transpose() const;
  FFMatrix pow(const Integer& e) const;  // e >= 0, square matrices

  bool is_identity() const;
  std::size_t rank() const;
  Fp determinant() const;
  bool invertible() const { return square() && determinant() != 0; }
  std::optional<FFMatrix> inverse() const;
  // Basis of {x : A x = 0}, as columns.
  std::vector<FFVector> kernel() const;

  // "p=5 [[1,2],[0,1]]"
  std::string to_string() const;
  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  Fp p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fp> a_;
};

}  // namespace pcdyn

#endif  // PCDYN_FF_MATRIX_HPP_
