// Small presentations and brute-force helpers shared by the test programs.

#ifndef PCDYN_TESTS_SUPPORT_HPP_
#define PCDYN_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "pcdyn/presentation.hpp"

namespace pcdyn::testing {

inline const char* kC5 = "pcpres 1\nn 1\norders 5\n";
inline const char* kC4 = "pcpres 1\nn 2\norders 2 2\npow 1 = 2\n";
// s, r, r^2
inline const char* kD4 =
    "pcpres 1\nn 3\norders 2 2 2\npow 2 = 3\nconj 2 1 = 2 3\n";
inline const char* kQ8 =
    "pcpres 1\nn 3\norders 2 2 2\npow 1 = 3\npow 2 = 3\nconj 2 1 = 2 3\n";
inline const char* kS3 = "pcpres 1\nn 2\norders 2 3\nconj 2 1 = 2^2\n";
inline const char* kC3xC3 = "pcpres 1\nn 2\norders 3 3\n";

inline PcPresentation pres(const char* text) { return parse_presentation(text); }

// All normal forms, in mixed-radix order.
inline std::vector<ExponentVector> all_elements(const PcPresentation& p) {
  std::vector<ExponentVector> out{p.identity()};
  for (std::size_t k = p.size(); k-- > 0;) {
    std::vector<ExponentVector> next;
    for (const auto& v : out)
      for (Exponent e = 0; e < p.relative_order(k); ++e) {
        ExponentVector w = v;
        w[k] = e;
        next.push_back(w);
      }
    out.swap(next);
  }
  return out;
}

inline std::string corpus_path(const std::string& name) {
  return std::string(PCDYN_CORPUS_DIR) + "/" + name;
}

}  // namespace pcdyn::testing

#endif  // PCDYN_TESTS_SUPPORT_HPP_
