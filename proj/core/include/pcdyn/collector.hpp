// Group arithmetic on normal forms: collection from the left and everything
// derived from it (inverses, powers, commutators, word evaluation).

#ifndef PCDYN_COLLECTOR_HPP_
#define PCDYN_COLLECTOR_HPP_

#include <cstdint>

#include "pcdyn/integer.hpp"
#include "pcdyn/presentation.hpp"

namespace pcdyn {

// Per-computation instrumentation. `multiplications` counts calls of the
// normal-form multiplication primitive; `bit_ops_estimate` counts the
// elementary collection steps performed inside those calls.
struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t bit_ops_estimate = 0;
};

// Normal-form multiplication for one presentation. The direct implementation
// is `Collector`; derived presentations can instead emulate their
// multiplication through a known isomorphism to a base presentation.
class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual const PcPresentation& presentation() const = 0;
  virtual ExponentVector multiply(const ExponentVector& a,
                                  const ExponentVector& b,
                                  OpCounter& ctr) const = 0;
};

class Collector final : public Multiplier {
 public:
  explicit Collector(const PcPresentation& pres) : pres_(pres) {}
  const PcPresentation& presentation() const override { return pres_; }
  ExponentVector multiply(const ExponentVector& a, const ExponentVector& b,
                          OpCounter& ctr) const override;

 private:
  const PcPresentation& pres_;
};

ExponentVector inverse(const Multiplier& m, const ExponentVector& a,
                       OpCounter& ctr);
// a^e for any integer e, by square-and-multiply.
ExponentVector power(const Multiplier& m, const ExponentVector& a,
                     const Integer& e, OpCounter& ctr);
// b^{-1} a b
ExponentVector conjugate(const Multiplier& m, const ExponentVector& a,
                         const ExponentVector& b, OpCounter& ctr);
// a^{-1} b^{-1} a b
ExponentVector commutator(const Multiplier& m, const ExponentVector& a,
                          const ExponentVector& b, OpCounter& ctr);
ExponentVector evaluate_word(const Multiplier& m, const Word& w,
                             OpCounter& ctr);
// x_0^{e_0} ... x_{n-1}^{e_{n-1}} evaluated with images[k] substituted for
// x_k; the images live in m's presentation.
ExponentVector substitute(const Multiplier& m,
                          const std::vector<ExponentVector>& images,
                          const ExponentVector& exponents, OpCounter& ctr);

// Convenience overloads that collect directly in `pres`.
ExponentVector multiply(const PcPresentation& pres, const ExponentVector& a,
                        const ExponentVector& b, OpCounter& ctr);
ExponentVector inverse(const PcPresentation& pres, const ExponentVector& a,
                       OpCounter& ctr);
ExponentVector power(const PcPresentation& pres, const ExponentVector& a,
                     const Integer& e, OpCounter& ctr);
ExponentVector conjugate(const PcPresentation& pres, const ExponentVector& a,
                         const ExponentVector& b, OpCounter& ctr);
ExponentVector commutator(const PcPresentation& pres, const ExponentVector& a,
                          const ExponentVector& b, OpCounter& ctr);
ExponentVector evaluate_word(const PcPresentation& pres, const Word& w,
                             OpCounter& ctr);

inline std::size_t depth(const ExponentVector& a) { return a.depth(); }
inline Exponent coeff(const ExponentVector& a, std::size_t k) { return a[k]; }

}  // namespace pcdyn

#endif  // PCDYN_COLLECTOR_HPP_
