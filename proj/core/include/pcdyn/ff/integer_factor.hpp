// Primality and factorisation of the integers that show up as candidate
// orders (p^e - 1 and friends).

#ifndef PCDYN_FF_INTEGER_FACTOR_HPP_
#define PCDYN_FF_INTEGER_FACTOR_HPP_

#include <cstdint>
#include <vector>

#include "pcdyn/integer.hpp"

namespace pcdyn {

struct IntFactor {
  Integer prime;
  unsigned multiplicity = 0;
  friend bool operator==(const IntFactor&, const IntFactor&) = default;
};

// Sorted by prime, multiplicities >= 1. Empty for 1.
using IntFactorization = std::vector<IntFactor>;

// Deterministic Miller-Rabin with a witness set valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);
// Exact below 2^64; probabilistic Miller-Rabin (40 rounds) above.
bool is_prime(const Integer& n);

// Trial division, then Pollard-Brent on what is left. n >= 1.
IntFactorization factor_integer(const Integer& n);

Integer multiply_out(const IntFactorization& f);
// Merges b into a (multiplicities add).
void merge_factors(IntFactorization& a, const IntFactorization& b);

}  // namespace pcdyn

#endif  // PCDYN_FF_INTEGER_FACTOR_HPP_
