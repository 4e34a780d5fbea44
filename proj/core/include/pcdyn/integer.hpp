#ifndef PCDYN_INTEGER_HPP_
#define PCDYN_INTEGER_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcdyn {

// Orders and exponents can outgrow 64 bits on large groups (Algorithm-style
// products of many primes), so they are carried as arbitrary precision.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(Integer a, Integer b) {
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

inline std::optional<std::uint64_t> to_u64(const Integer& v) {
  if (v < 0 || v > Integer(std::numeric_limits<std::uint64_t>::max()))
    return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace pcdyn

#endif  // PCDYN_INTEGER_HPP_
