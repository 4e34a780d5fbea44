#include "pcdyn/consistency.hpp"

#include <cstdint>
#include <vector>

#include "pcdyn/collector.hpp"

namespace pcdyn {

namespace {

struct Indexer {
  std::vector<std::uint64_t> stride;
  std::uint64_t total = 1;

  explicit Indexer(const PcPresentation& pres) : stride(pres.size()) {
    for (std::size_t k = pres.size(); k-- > 0;) {
      stride[k] = total;
      total *= pres.relative_order(k);
    }
  }
  std::uint64_t index(const ExponentVector& v) const {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < v.size(); ++k) r += v[k] * stride[k];
    return r;
  }
  ExponentVector vector(std::uint64_t idx, const PcPresentation& pres) const {
    ExponentVector v(pres.size());
    for (std::size_t k = 0; k < pres.size(); ++k) {
      v[k] = static_cast<Exponent>(idx / stride[k]);
      idx %= stride[k];
    }
    return v;
  }
};

}  // namespace

const char* to_string(ConsistencyVerdict v) {
  switch (v) {
    case ConsistencyVerdict::kPass:
      return "pass";
    case ConsistencyVerdict::kFail:
      return "fail";
    case ConsistencyVerdict::kUnchecked:
      return "unchecked";
  }
  return "?";
}

ConsistencyReport check_consistency(const PcPresentation& pres,
                                    std::uint64_t budget) {
  ConsistencyReport rep;
  const Integer order = pres.group_order();
  if (order > budget) {
    rep.verdict = ConsistencyVerdict::kUnchecked;
    rep.witness = "group order " + order.str() + " exceeds enumeration budget " +
                  std::to_string(budget);
    return rep;
  }
  const std::size_t n = pres.size();
  Indexer ix(pres);
  const std::uint64_t total = ix.total;
  Collector coll(pres);
  OpCounter ctr;

  // perm[i][v] = index of v * x_i
  std::vector<std::vector<std::uint32_t>> perm(n, std::vector<std::uint32_t>(total));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ExponentVector v = ix.vector(idx, pres);
    for (std::size_t i = 0; i < n; ++i)
      perm[i][idx] = static_cast<std::uint32_t>(
          ix.index(coll.multiply(v, pres.generator(i), ctr)));
  }
  rep.verdict = ConsistencyVerdict::kFail;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> hit(total, 0);
    for (auto t : perm[i]) {
      if (hit[t]) {
        rep.witness = "right multiplication by x" + std::to_string(i + 1) +
                      " is not injective";
        return rep;
      }
      hit[t] = 1;
    }
  }

  // Orbit of the identity under the generated permutation group.
  std::vector<char> seen(total, 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t i = 0; i < n; ++i) {
      auto t = perm[i][queue[h]];
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  rep.elements = queue.size();
  if (rep.elements != total) {
    rep.witness = "only " + std::to_string(rep.elements) + " of " +
                  std::to_string(total) + " normal forms are reachable";
    return rep;
  }

  auto apply_word = [&](std::uint32_t pt, const PcPresentation::SparseWord& w) {
    for (auto [g, e] : w)
      for (Exponent k = 0; k < e; ++k) pt = perm[g][pt];
    return pt;
  };
  for (std::uint32_t pt = 0; pt < total; ++pt) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t lhs = pt;
      for (Exponent k = 0; k < pres.relative_order(i); ++k) lhs = perm[i][lhs];
      if (lhs != apply_word(pt, pres.power_word(i))) {
        rep.witness = "power relation of x" + std::to_string(i + 1) +
                      " fails at " + ix.vector(pt, pres).to_string();
        return rep;
      }
      // x_j x_i = x_i w_ij
      for (std::size_t j = i + 1; j < n; ++j) {
        std::uint32_t l = perm[i][perm[j][pt]];
        std::uint32_t r = apply_word(perm[i][pt], pres.conjugate_word(j, i));
        if (l != r) {
          rep.witness = "conjugate relation x" + std::to_string(j + 1) + "^x" +
                        std::to_string(i + 1) + " fails at " +
                        ix.vector(pt, pres).to_string();
          return rep;
        }
      }
    }
  }
  rep.verdict = ConsistencyVerdict::kPass;
  return rep;
}

}  // namespace pcdyn
