#include "pcdyn/ff/polynomial.hpp"

#include <algorithm>
#include <map>

#include "pcdyn/error.hpp"
#include "pcdyn/ff/integer_factor.hpp"

namespace pcdyn {

FFPolynomial::FFPolynomial(Fp p, std::vector<Fp> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

void FFPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPolynomial FFPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(fp::inv(lead(), p_));
}

FFPolynomial FFPolynomial::operator+(const FFPolynomial& b) const {
  FFPolynomial r(p_);
  r.c_.resize(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = fp::add(coeff(i), b.coeff(i), p_);
  r.trim();
  return r;
}

FFPolynomial FFPolynomial::operator-(const FFPolynomial& b) const {
  FFPolynomial r(p_);
  r.c_.resize(std::max(c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = fp::sub(coeff(i), b.coeff(i), p_);
  r.trim();
  return r;
}

FFPolynomial FFPolynomial::operator*(const FFPolynomial& b) const {
  FFPolynomial r(p_);
  if (is_zero() || b.is_zero()) return r;
  r.c_.assign(c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = (r.c_[i + j] + c_[i] * b.c_[j]) % p_;
  }
  r.trim();
  return r;
}

FFPolynomial FFPolynomial::scaled(Fp s) const {
  FFPolynomial r = *this;
  for (auto& x : r.c_) x = fp::mul(x, s % p_, p_);
  r.trim();
  return r;
}

std::pair<FFPolynomial, FFPolynomial> FFPolynomial::divmod(
    const FFPolynomial& b) const {
  if (b.is_zero()) fail_invariant("polynomial division by zero");
  FFPolynomial rem = *this;
  FFPolynomial quo(p_);
  if (degree() < b.degree()) return {quo, rem};
  const std::size_t db = b.c_.size() - 1;
  quo.c_.assign(c_.size() - db, 0);
  const Fp li = fp::inv(b.lead(), p_);
  for (std::size_t k = c_.size(); k-- > db;) {
    Fp q = fp::mul(rem.c_[k], li, p_);
    quo.c_[k - db] = q;
    if (!q) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem.c_[k - db + j] = fp::sub(rem.c_[k - db + j], fp::mul(q, b.c_[j], p_), p_);
  }
  rem.trim();
  quo.trim();
  return {quo, rem};
}

FFPolynomial FFPolynomial::derivative() const {
  FFPolynomial r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = fp::mul(c_[i], i % p_, p_);
  r.trim();
  return r;
}

Fp FFPolynomial::eval(Fp x) const {
  Fp r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p_;
  return r;
}

FFMatrix FFPolynomial::eval(const FFMatrix& m) const {
  FFMatrix r(p_, m.rows(), m.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) = fp::add(r(k, k), c_[i], p_);
  }
  return r;
}

std::string FFPolynomial::to_string() const {
  std::string s = "p=" + std::to_string(p_) + " [";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

FFPolynomial gcd(const FFPolynomial& a, const FFPolynomial& b) {
  FFPolynomial x = a, y = b;
  while (!y.is_zero()) {
    FFPolynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FFPolynomial powmod(const FFPolynomial& base, const Integer& e,
                    const FFPolynomial& m) {
  const Fp p = m.modulus();
  FFPolynomial r = FFPolynomial::constant(p, 1) % m;
  if (e <= 0) return r;
  FFPolynomial b = base % m;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = 0; i <= bits; ++i) {
    if (boost::multiprecision::bit_test(e, i)) r = (r * b) % m;
    if (i < bits) b = (b * b) % m;
  }
  return r;
}

FFPolynomial pow(const FFPolynomial& base, unsigned e) {
  FFPolynomial r = FFPolynomial::constant(base.modulus(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

namespace {

bool poly_less(const FFPolynomial& a, const FFPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                      b.coeffs().rbegin(), b.coeffs().rend());
}

// Monic f with f' = 0: f = g(X^p) = g(X)^p over F_p.
FFPolynomial pth_root(const FFPolynomial& f) {
  const Fp p = f.modulus();
  std::vector<Fp> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FFPolynomial(p, std::move(c));
}

void squarefree(const FFPolynomial& f, unsigned scale,
                std::vector<std::pair<FFPolynomial, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const Fp p = f.modulus();
  FFPolynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  FFPolynomial c = gcd(f, d);
  FFPolynomial w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FFPolynomial y = gcd(w, c);
    FFPolynomial z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0)
    squarefree(pth_root(c.monic()), scale * static_cast<unsigned>(p), out);
}

// f monic squarefree of positive degree.
std::vector<FFPolynomial> berlekamp_split(const FFPolynomial& f) {
  if (is_irreducible(f)) return {f};
  const Fp p = f.modulus();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // Column i holds X^{ip} mod f; kernel of B - I is the Berlekamp algebra.
  FFMatrix b(p, n, n);
  FFPolynomial xp = powmod(FFPolynomial::x(p), Integer(p), f);
  FFPolynomial cur = FFPolynomial::constant(p, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) b(k, i) = cur.coeff(k);
    cur = (cur * xp) % f;
  }
  auto basis = (b - FFMatrix::identity(p, n)).kernel();
  const std::size_t count = basis.size();
  std::vector<FFPolynomial> parts{f};
  for (const auto& v : basis) {
    if (parts.size() == count) break;
    FFPolynomial g(p, v.v);
    if (g.degree() <= 0) continue;
    std::vector<FFPolynomial> next;
    for (const auto& h : parts) {
      FFPolynomial rest = h;
      for (Fp s = 0; s < p && rest.degree() > 1; ++s) {
        FFPolynomial d = gcd(rest, g - FFPolynomial::constant(p, s));
        if (d.degree() > 0 && d.degree() < rest.degree()) {
          next.push_back(d);
          rest = rest / d;
        }
      }
      next.push_back(rest);
    }
    parts = std::move(next);
  }
  if (parts.size() != count)
    fail_invariant("Berlekamp splitting did not separate all factors");
  return parts;
}

}  // namespace

bool is_irreducible(const FFPolynomial& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Fp p = f.modulus();
  const FFPolynomial g = f.monic();
  const unsigned n = static_cast<unsigned>(g.degree());
  const FFPolynomial x = FFPolynomial::x(p);
  // frob[k] = X^{p^k} mod g
  std::vector<FFPolynomial> frob{x % g};
  for (unsigned k = 1; k <= n; ++k)
    frob.push_back(powmod(frob.back(), Integer(p), g));
  if (!(frob[n] == x % g)) return false;
  for (const auto& [q, mult] : factor_integer(n)) {
    unsigned k = n / static_cast<unsigned>(q);
    if (gcd(frob[k] - x, g).degree() != 0) return false;
  }
  return true;
}

PolyFactorization berlekamp_factor(const FFPolynomial& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  PolyFactorization out;
  out.p = f.modulus();
  out.unit = f.lead();
  std::vector<std::pair<FFPolynomial, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::vector<PolyFactor> all;
  for (const auto& [g, m] : sqf)
    for (auto& q : berlekamp_split(g)) all.push_back({q.monic(), m});
  std::sort(all.begin(), all.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return poly_less(a.factor, b.factor);
  });
  for (auto& pf : all) {
    if (!out.factors.empty() && out.factors.back().factor == pf.factor)
      out.factors.back().multiplicity += pf.multiplicity;
    else
      out.factors.push_back(pf);
  }
  return out;
}

FFPolynomial multiply_out(const PolyFactorization& f) {
  FFPolynomial r = FFPolynomial::constant(f.p, f.unit);
  for (const auto& [q, m] : f.factors) r = r * pow(q, m);
  return r;
}

}  // namespace pcdyn
