#include "pcdyn/ff/order.hpp"

#include <map>

#include "pcdyn/error.hpp"
#include "pcdyn/ff/rcf.hpp"

namespace pcdyn {

namespace {

FactoredOrder from_factors(IntFactorization f) {
  FactoredOrder o;
  o.value = multiply_out(f);
  o.factors = std::move(f);
  return o;
}

Integer ipow(const Integer& b, unsigned e) {
  return boost::multiprecision::pow(b, e);
}

// Order of X modulo an irreducible Q with Q(0) != 0: a divisor of p^e - 1.
FactoredOrder irreducible_order(const FFPolynomial& q) {
  const Fp p = q.modulus();
  const FFPolynomial x = FFPolynomial::x(p);
  const FFPolynomial one = FFPolynomial::constant(p, 1);
  Integer n = ipow(Integer(p), static_cast<unsigned>(q.degree())) - 1;
  IntFactorization f = factor_integer(n);
  for (auto& [r, k] : f) {
    while (k > 0 && powmod(x, n / r, q) == one % q) {
      n /= r;
      --k;
    }
  }
  IntFactorization kept;
  for (auto& pf : f)
    if (pf.multiplicity) kept.push_back(pf);
  return from_factors(kept);
}

// ord(Q^m) = ord(Q) * p^t with t minimal such that p^t >= m.
FactoredOrder prime_power_order(const FactoredOrder& base, Fp p, unsigned m) {
  unsigned t = 0;
  Integer pt = 1;
  while (pt < m) {
    pt *= p;
    ++t;
  }
  FactoredOrder o = base;
  if (t) {
    merge_factors(o.factors, {{Integer(p), t}});
    o.value = multiply_out(o.factors);
  }
  return o;
}

template <class Holds>
void certify(const FactoredOrder& o, Holds holds, const char* what) {
  if (!holds(o.value))
    fail_invariant(std::string(what) + ": claimed order does not annihilate");
  for (const auto& [q, k] : o.factors)
    if (holds(o.value / q))
      fail_invariant(std::string(what) + ": claimed order is not minimal");
}

}  // namespace

FactoredOrder lcm(const FactoredOrder& a, const FactoredOrder& b) {
  std::map<Integer, unsigned> m;
  for (const auto& [q, k] : a.factors) m[q] = std::max(m[q], k);
  for (const auto& [q, k] : b.factors) m[q] = std::max(m[q], k);
  IntFactorization f;
  for (auto& [q, k] : m) f.push_back({q, k});
  return from_factors(std::move(f));
}

FactoredOrder poly_order_factored(const FFPolynomial& f) {
  if (f.is_zero()) throw InputError("order of the zero polynomial");
  const Fp p = f.modulus();
  if (f.coeff(0) == 0)
    throw InputError("polynomial order needs a nonzero constant term");
  const FFPolynomial g = f.monic();
  FactoredOrder o;
  if (g.degree() == 0) return o;
  for (const auto& [q, m] : berlekamp_factor(g).factors)
    o = lcm(o, prime_power_order(irreducible_order(q), p, m));
  const FFPolynomial x = FFPolynomial::x(p);
  const FFPolynomial one = FFPolynomial::constant(p, 1) % g;
  certify(o, [&](const Integer& n) { return powmod(x, n, g) == one; },
          "poly_order");
  return o;
}

Integer poly_order(const FFPolynomial& f) { return poly_order_factored(f).value; }

FactoredOrder matrix_order_factored(const FFMatrix& m) {
  if (!m.invertible()) throw InputError("matrix order needs an invertible matrix");
  if (m.rows() == 0) return {};
  RcfDecomposition d = rcf(m);
  FactoredOrder o = poly_order_factored(d.invariant_factors.back());
  certify(o, [&](const Integer& n) { return m.pow(n).is_identity(); },
          "matrix_order");
  return o;
}

Integer matrix_order(const FFMatrix& m) { return matrix_order_factored(m).value; }

FactoredOrder affine_cycle_length_zero_factored(const FFMatrix& m,
                                                const FFVector& t) {
  if (!m.invertible())
    throw InputError("affine cycle length needs an invertible matrix");
  if (t.size() != m.rows()) throw InputError("translation has wrong dimension");
  const Fp p = m.modulus();
  const std::size_t d = m.rows();
  FactoredOrder o;
  if (t.is_zero()) return o;

  // In the rational canonical basis each companion block of f is
  // F_p[X]/(f) with M acting as X, and the n-th iterate of 0 is
  // S (1 + X + ... + X^{n-1}). Per prime-power factor Q^m of f this vanishes
  // iff X^n = 1 mod Q^{m - v + [Q = X-1]} where v is the Q-valuation of S.
  RcfDecomposition rc = rcf(m);
  FFVector s = rc.T_inverse * t;
  const FFPolynomial x_minus_one = FFPolynomial::linear(p, 1, p - 1);
  std::map<std::vector<Fp>, FactoredOrder> irr_cache;
  for (std::size_t b = 0; b < rc.invariant_factors.size(); ++b) {
    const FFPolynomial& f = rc.invariant_factors[b];
    const std::size_t off = rc.block_offset(b);
    std::vector<Fp> sc(s.v.begin() + off, s.v.begin() + off + f.degree());
    FFPolynomial sp(p, sc);
    if (sp.is_zero()) continue;
    for (const auto& [q, mult] : berlekamp_factor(f).factors) {
      FFPolynomial qm = pow(q, mult);
      FFPolynomial r = sp % qm;
      unsigned v = 0;
      while (v < mult && !r.is_zero()) {
        auto [quo, rem] = r.divmod(q);
        if (!rem.is_zero()) break;
        r = quo;
        ++v;
      }
      if (r.is_zero()) v = mult;
      unsigned e = mult - v + (q == x_minus_one ? 1 : 0);
      if (e == 0) continue;
      auto it = irr_cache.find(q.coeffs());
      if (it == irr_cache.end())
        it = irr_cache.emplace(q.coeffs(), irreducible_order(q)).first;
      o = lcm(o, prime_power_order(it->second, p, e));
    }
  }

  FFMatrix aug(p, d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
    aug(i, d) = t[i];
  }
  aug(d, d) = 1;
  certify(o,
          [&](const Integer& n) {
            FFMatrix an = aug.pow(n);
            for (std::size_t i = 0; i < d; ++i)
              if (an(i, d) != 0) return false;
            return true;
          },
          "affine_cycle_length_zero");
  return o;
}

Integer affine_cycle_length_zero(const FFMatrix& m, const FFVector& t) {
  return affine_cycle_length_zero_factored(m, t).value;
}

}  // namespace pcdyn
