#include "pcdyn/ff/rcf.hpp"

#include <utility>

#include "pcdyn/error.hpp"

namespace pcdyn {

namespace {

// q(A) v by Horner.
FFVector apply_poly(const FFPolynomial& q, const FFMatrix& a, const FFVector& v) {
  const Fp p = a.modulus();
  FFVector r = FFVector::zero(p, v.size());
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    r = a * r;
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = fp::add(r[i], fp::mul(c[k], v[i], p), p);
  }
  return r;
}

}  // namespace

std::size_t RcfDecomposition::block_offset(std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k)
    off += static_cast<std::size_t>(invariant_factors[k].degree());
  return off;
}

FFMatrix companion_matrix(const FFPolynomial& f) {
  const Fp p = f.modulus();
  const FFPolynomial g = f.monic();
  const std::size_t m = static_cast<std::size_t>(g.degree());
  FFMatrix c(p, m, m);
  for (std::size_t k = 0; k + 1 < m; ++k) c(k + 1, k) = 1;
  for (std::size_t k = 0; k < m; ++k) c(k, m - 1) = fp::neg(g.coeff(k), p);
  return c;
}

// Smith normal form of X*I - A over F_p[X]. Rows index module generators:
// the relation columns say sum_i R(i,j) g_i = 0, so each row operation is
// mirrored on the generator vectors g_i (column operations need no record).
RcfDecomposition rcf(const FFMatrix& a) {
  if (!a.square()) throw InputError("rcf needs a square matrix");
  const Fp p = a.modulus();
  const std::size_t d = a.rows();
  std::vector<std::vector<FFPolynomial>> r(d, std::vector<FFPolynomial>(d, FFPolynomial(p)));
  std::vector<FFVector> gens;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      r[i][j] = FFPolynomial(p, {fp::neg(a(i, j), p), i == j ? Fp{1} : Fp{0}});
    FFVector e = FFVector::zero(p, d);
    e[i] = 1;
    gens.push_back(e);
  }

  // row_dst += c * row_src  <=>  g_src -= c(A) g_dst
  auto row_add = [&](std::size_t dst, std::size_t src, const FFPolynomial& c) {
    for (std::size_t j = 0; j < d; ++j) r[dst][j] = r[dst][j] + c * r[src][j];
    FFVector w = apply_poly(c, a, gens[dst]);
    for (std::size_t k = 0; k < d; ++k) gens[src][k] = fp::sub(gens[src][k], w[k], p);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const FFPolynomial& c) {
    for (std::size_t i = 0; i < d; ++i) r[i][dst] = r[i][dst] + c * r[i][src];
  };

  for (std::size_t t = 0; t < d; ++t) {
    while (true) {
      std::size_t bi = d, bj = d;
      for (std::size_t i = t; i < d; ++i)
        for (std::size_t j = t; j < d; ++j)
          if (!r[i][j].is_zero() &&
              (bi == d || r[i][j].degree() < r[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == d) fail_invariant("characteristic matrix is singular");
      if (bi != t) {
        std::swap(r[bi], r[t]);
        std::swap(gens[bi], gens[t]);
      }
      if (bj != t)
        for (std::size_t i = 0; i < d; ++i) std::swap(r[i][bj], r[i][t]);

      bool clean = true;
      for (std::size_t i = t + 1; i < d; ++i) {
        if (r[i][t].is_zero()) continue;
        auto [q, rem] = r[i][t].divmod(r[t][t]);
        row_add(i, t, FFPolynomial(p) - q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < d; ++j) {
        if (r[t][j].is_zero()) continue;
        auto [q, rem] = r[t][j].divmod(r[t][t]);
        col_add(j, t, FFPolynomial(p) - q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < d && divides; ++i)
        for (std::size_t j = t + 1; j < d; ++j)
          if (!(r[i][j] % r[t][t]).is_zero()) {
            row_add(t, i, FFPolynomial::constant(p, 1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    // Make the pivot monic: row_t *= u^{-1}  <=>  g_t *= u.
    Fp u = r[t][t].lead();
    r[t][t] = r[t][t].monic();
    for (auto& x : gens[t].v) x = fp::mul(x, u, p);
  }

  RcfDecomposition out;
  out.T = FFMatrix(p, d, d);
  std::size_t col = 0;
  for (std::size_t t = 0; t < d; ++t) {
    if (r[t][t].degree() <= 0) continue;
    out.invariant_factors.push_back(r[t][t]);
    FFVector w = gens[t];
    for (long k = 0; k < r[t][t].degree(); ++k) {
      out.T.set_column(col++, w);
      w = a * w;
    }
  }
  if (col != d) fail_invariant("invariant factor degrees do not add up");
  auto ti = out.T.inverse();
  if (!ti) fail_invariant("rational canonical basis is not a basis");
  out.T_inverse = std::move(*ti);

  FFMatrix blocks(p, d, d);
  for (std::size_t i = 0; i < out.invariant_factors.size(); ++i) {
    FFMatrix c = companion_matrix(out.invariant_factors[i]);
    std::size_t off = out.block_offset(i);
    for (std::size_t x = 0; x < c.rows(); ++x)
      for (std::size_t y = 0; y < c.cols(); ++y) blocks(off + x, off + y) = c(x, y);
  }
  if (!(out.T_inverse * a * out.T == blocks))
    fail_invariant("rational canonical form check failed");
  for (std::size_t i = 1; i < out.invariant_factors.size(); ++i)
    if (!(out.invariant_factors[i] % out.invariant_factors[i - 1]).is_zero())
      fail_invariant("invariant factors do not form a divisibility chain");
  return out;
}

}  // namespace pcdyn
