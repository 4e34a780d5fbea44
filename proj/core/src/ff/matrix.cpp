#include "pcdyn/ff/matrix.hpp"

#include <utility>

#include "pcdyn/error.hpp"

namespace pcdyn {

Fp fp::pow(Fp a, std::uint64_t e, Fp p) {
  Fp r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Fp fp::inv(Fp a, Fp p) {
  if (a % p == 0) fail_invariant("inverse of zero in F_p");
  return pow(a, p - 2, p);
}

FFVector::FFVector(Fp modulus, std::vector<Fp> values)
    : p(modulus), v(std::move(values)) {
  for (auto& x : v) x %= p;
}

bool FFVector::is_zero() const {
  for (Fp x : v)
    if (x) return false;
  return true;
}

std::string FFVector::to_string() const {
  std::string s = "p=" + std::to_string(p) + " [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

FFMatrix::FFMatrix(Fp p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

FFMatrix::FFMatrix(Fp p, const std::vector<std::vector<Fp>>& rows)
    : p_(p), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
    for (Fp x : r) a_.push_back(x % p);
  }
}

FFMatrix FFMatrix::identity(Fp p, std::size_t n) {
  FFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FFVector FFMatrix::column(std::size_t j) const {
  FFVector c = FFVector::zero(p_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void FFMatrix::set_column(std::size_t j, const FFVector& c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
}

FFMatrix FFMatrix::operator*(const FFMatrix& b) const {
  if (cols_ != b.rows_ || p_ != b.p_) fail_invariant("matrix shape mismatch");
  FFMatrix c(p_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Fp x = (*this)(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) = (c(i, j) + x * b(k, j)) % p_;
    }
  return c;
}

FFVector FFMatrix::operator*(const FFVector& x) const {
  if (cols_ != x.size()) fail_invariant("matrix-vector shape mismatch");
  FFVector y = FFVector::zero(p_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Fp s = 0;
    for (std::size_t k = 0; k < cols_; ++k) s = (s + (*this)(i, k) * x[k]) % p_;
    y[i] = s;
  }
  return y;
}

FFMatrix FFMatrix::operator+(const FFMatrix& b) const {
  FFMatrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = (a_[i] + b.a_[i]) % p_;
  return c;
}

FFMatrix FFMatrix::operator-(const FFMatrix& b) const {
  FFMatrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    c.a_[i] = (a_[i] + p_ - b.a_[i]) % p_;
  return c;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FFMatrix FFMatrix::pow(const Integer& e) const {
  if (!square()) fail_invariant("power of a non-square matrix");
  FFMatrix r = identity(p_, rows_);
  if (e <= 0) return r;
  FFMatrix b = *this;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = 0; i <= bits; ++i) {
    if (boost::multiprecision::bit_test(e, i)) r = r * b;
    if (i < bits) b = b * b;
  }
  return r;
}

bool FFMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 % p_ : 0)) return false;
  return true;
}

namespace {

// Row-reduces m in place; returns pivot columns. det (if wanted) tracks the
// product of pivots and the sign of swaps.
std::vector<std::size_t> row_reduce(FFMatrix& m, Fp* det) {
  const Fp p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Fp d = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      d = fp::neg(d, p);
    }
    Fp lead = m(r, c);
    d = fp::mul(d, lead, p);
    Fp li = fp::inv(lead, p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = fp::mul(m(r, j), li, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Fp f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = fp::sub(m(i, j), fp::mul(f, m(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  if (det) *det = r == m.rows() ? d : 0;
  return pivots;
}

}  // namespace

std::size_t FFMatrix::rank() const {
  FFMatrix m = *this;
  return row_reduce(m, nullptr).size();
}

Fp FFMatrix::determinant() const {
  if (!square()) fail_invariant("determinant of a non-square matrix");
  if (rows_ == 0) return 1 % p_;
  FFMatrix m = *this;
  Fp d = 0;
  row_reduce(m, &d);
  return d;
}

std::optional<FFMatrix> FFMatrix::inverse() const {
  if (!square()) return std::nullopt;
  const std::size_t n = rows_;
  FFMatrix aug(p_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1 % p_;
  }
  auto piv = row_reduce(aug, nullptr);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FFMatrix inv(p_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<FFVector> FFMatrix::kernel() const {
  FFMatrix m = *this;
  auto piv = row_reduce(m, nullptr);
  std::vector<char> is_pivot(cols_, 0);
  for (auto c : piv) is_pivot[c] = 1;
  std::vector<FFVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    FFVector x = FFVector::zero(p_, cols_);
    x[f] = 1 % p_;
    for (std::size_t r = 0; r < piv.size(); ++r)
      x[piv[r]] = fp::neg(m(r, f), p_);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::string FFMatrix::to_string() const {
  std::string s = "p=" + std::to_string(p_) + " [";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += std::to_string((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace pcdyn
