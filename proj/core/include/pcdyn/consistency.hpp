#ifndef PCDYN_CONSISTENCY_HPP_
#define PCDYN_CONSISTENCY_HPP_

#include <cstdint>
#include <string>

#include "pcdyn/presentation.hpp"

namespace pcdyn {

enum class ConsistencyVerdict { kPass, kFail, kUnchecked };

struct ConsistencyReport {
  ConsistencyVerdict verdict = ConsistencyVerdict::kUnchecked;
  std::uint64_t elements = 0;  // distinct normal forms reached
  std::string witness;         // first failing relation, or budget note

  bool passed() const { return verdict == ConsistencyVerdict::kPass; }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// Consistency by enumeration: builds the right-multiplication action of every
// generator on all prod p_i normal forms and checks that these are
// permutations, act transitively from the identity, and satisfy every
// defining relation. Groups above `budget` get a kUnchecked verdict.
ConsistencyReport check_consistency(
    const PcPresentation& pres,
    std::uint64_t budget = kDefaultEnumerationBudget);

const char* to_string(ConsistencyVerdict v);

}  // namespace pcdyn

#endif  // PCDYN_CONSISTENCY_HPP_
