#include "pcdyn/ff/integer_factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

#include "pcdyn/error.hpp"

namespace pcdyn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard-Brent; n odd composite. Returns a nontrivial divisor.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Integer pollard_brent_big(const Integer& n) {
  for (unsigned c = 1;; ++c) {
    Integer x = 2, y = 2, g = 1;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = gcd(x > y ? Integer(x - y) : Integer(y - x), n);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d;
  if (auto small = to_u64(n))
    d = pollard_brent(*small);
  else
    d = pollard_brent_big(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (auto small = to_u64(n)) return is_prime(*small);
  return boost::multiprecision::miller_rabin_test(n, 40);
}

IntFactorization factor_integer(const Integer& n) {
  if (n < 1) throw InputError("factor_integer needs a positive integer");
  std::map<Integer, unsigned> out;
  Integer m = n;
  for (unsigned q = 2; q < 1000; q += (q == 2 ? 1 : 2)) {
    if (Integer(q) * q > m) break;
    while (m % q == 0) {
      ++out[q];
      m /= q;
    }
  }
  factor_rec(m, out);
  IntFactorization f;
  for (auto& [p, k] : out) f.push_back({p, k});
  return f;
}

Integer multiply_out(const IntFactorization& f) {
  Integer r = 1;
  for (const auto& [p, k] : f) r *= boost::multiprecision::pow(p, k);
  return r;
}

void merge_factors(IntFactorization& a, const IntFactorization& b) {
  std::map<Integer, unsigned> m;
  for (const auto& [p, k] : a) m[p] += k;
  for (const auto& [p, k] : b) m[p] += k;
  a.clear();
  for (auto& [p, k] : m) a.push_back({p, k});
}

}  // namespace pcdyn
