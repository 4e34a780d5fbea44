#ifndef PCDYN_ERROR_HPP_
#define PCDYN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pcdyn {

// Malformed or mathematically invalid input (bad file, non-prime order,
// images that do not define a homomorphism, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold. Seeing this means a bug or an input
// that slipped past validation.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A brute-force computation would exceed its configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_invariant(const std::string& what) {
  throw InvariantError(what);
}

}  // namespace pcdyn

#endif  // PCDYN_ERROR_HPP_
