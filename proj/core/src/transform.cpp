#include "pcdyn/transform.hpp"

#include <algorithm>

#include "pcdyn/error.hpp"
#include "pcdyn/ff/matrix.hpp"

namespace pcdyn {

PcIsomorphism identity_isomorphism(PresentationPtr pres) {
  PcIsomorphism iso{pres, pres, {}, {}};
  for (std::size_t i = 0; i < pres->size(); ++i) {
    iso.forward.push_back(pres->generator(i));
    iso.backward.push_back(pres->generator(i));
  }
  return iso;
}

ExponentVector map_forward(const Multiplier& target, const PcIsomorphism& iso,
                           const ExponentVector& g, OpCounter& ctr) {
  return substitute(target, iso.forward, g, ctr);
}

ExponentVector map_forward(const PcIsomorphism& iso, const ExponentVector& g,
                           OpCounter& ctr) {
  return map_forward(Collector(*iso.target), iso, g, ctr);
}

ExponentVector map_backward(const Multiplier& source, const PcIsomorphism& iso,
                            const ExponentVector& g, OpCounter& ctr) {
  return substitute(source, iso.backward, g, ctr);
}

ExponentVector map_backward(const PcIsomorphism& iso, const ExponentVector& g,
                            OpCounter& ctr) {
  return map_backward(Collector(*iso.source), iso, g, ctr);
}

PcIsomorphism compose(const PcIsomorphism& a, const PcIsomorphism& b,
                      OpCounter& ctr) {
  PcIsomorphism c{a.source, b.target, {}, {}};
  Collector src(*a.source), dst(*b.target);
  for (const auto& x : a.forward) c.forward.push_back(map_forward(dst, b, x, ctr));
  for (const auto& y : b.backward) c.backward.push_back(map_backward(src, a, y, ctr));
  return c;
}

bool is_valid_isomorphism(const PcIsomorphism& iso, OpCounter& ctr) {
  const std::size_t n = iso.source->size();
  if (iso.target->size() != n || iso.forward.size() != n || iso.backward.size() != n)
    return false;
  Collector src(*iso.source), dst(*iso.target);
  for (std::size_t i = 0; i < n; ++i) {
    if (map_backward(src, iso, iso.forward[i], ctr) != iso.source->generator(i))
      return false;
    if (map_forward(dst, iso, iso.backward[i], ctr) != iso.target->generator(i))
      return false;
  }
  return true;
}

PcgsCoordinates::PcgsCoordinates(PresentationPtr base,
                                 std::vector<ExponentVector> pcgs, OpCounter& ctr)
    : base_(std::move(base)), coll_(*base_), elems_(std::move(pcgs)) {
  const std::size_t n = base_->size();
  const std::size_t k = elems_.size();
  orders_.resize(k);
  new_depth_.resize(k);
  level_.resize(k);
  suffix_.assign(k + 1, InducedPcgs(n));
  for (std::size_t i = k; i-- > 0;) {
    base_->check_element(elems_[i]);
    std::vector<ExponentVector> gens = suffix_[i + 1].entries();
    gens.push_back(elems_[i]);
    suffix_[i] = induced_pcgs(coll_, gens, ctr);
    if (suffix_[i].size() != suffix_[i + 1].size() + 1)
      fail_invariant("sequence is not a pcgs: entry " + std::to_string(i + 1) +
                     " does not generate a prime-index extension");
    ExponentVector r = sift(coll_, suffix_[i + 1], elems_[i], ctr);
    const std::size_t d = r.depth();
    new_depth_[i] = d;
    orders_[i] = base_->relative_order(d);
    std::vector<ExponentVector> lv;
    bool placed = false;
    for (const auto& e : suffix_[i + 1].entries()) {
      if (!placed && e.depth() > d) {
        lv.push_back(r);
        placed = true;
      }
      lv.push_back(e);
    }
    if (!placed) lv.push_back(r);
    level_[i] = InducedPcgs::from_entries(n, std::move(lv));
  }
}

std::optional<ExponentVector> PcgsCoordinates::coordinates(
    const ExponentVector& g, OpCounter& ctr) const {
  const std::size_t k = elems_.size();
  ExponentVector e(k);
  ExponentVector r = g;
  for (std::size_t i = 0; i < k && !r.is_identity(); ++i) {
    // The exponent of y_i is the coefficient picked up at the new depth
    // while sifting r through Y_{i+1} plus a representative of y_i Y_{i+1}.
    const std::size_t target = new_depth_[i];
    const InducedPcgs& lv = level_[i];
    ExponentVector s = r;
    Exponent f = 0;
    while (!s.is_identity()) {
      const std::size_t d = s.depth();
      if (d > target) break;
      const ExponentVector* y = lv.at_depth(d);
      if (!y) return std::nullopt;
      const Fp p = base_->relative_order(d);
      Exponent c = static_cast<Exponent>(fp::mul(s[d], fp::inv((*y)[d], p), p));
      if (d == target) {
        f = c;
        break;
      }
      s = coll_.multiply(power(coll_, *y, -Integer(c), ctr), s, ctr);
    }
    e[i] = f;
    if (f) r = coll_.multiply(power(coll_, elems_[i], -Integer(f), ctr), r, ctr);
  }
  if (!r.is_identity()) return std::nullopt;
  return e;
}

ExponentVector PcgsCoordinates::coordinates_of_member(const ExponentVector& g,
                                                      OpCounter& ctr) const {
  auto c = coordinates(g, ctr);
  if (!c) fail_invariant("element " + g.to_string() + " is not in the subgroup");
  return *c;
}

PcPresentation PcgsCoordinates::presentation(OpCounter& ctr) const {
  const std::size_t k = elems_.size();
  auto check_tail = [&](const ExponentVector& v, std::size_t i) {
    for (std::size_t t = 0; t <= i; ++t)
      if (v[t]) fail_invariant("sequence is not a pcgs: relation of y" +
                               std::to_string(i + 1) + " leaves the subgroup chain");
  };
  std::vector<ExponentVector> powers(k);
  std::vector<std::vector<ExponentVector>> conj(k);
  for (std::size_t i = 0; i < k; ++i) {
    powers[i] = coordinates_of_member(power(coll_, elems_[i], Integer(orders_[i]), ctr), ctr);
    check_tail(powers[i], i);
  }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ExponentVector c =
          coordinates_of_member(conjugate(coll_, elems_[j], elems_[i], ctr), ctr);
      check_tail(c, i);
      conj[j].push_back(c);
    }
  return PcPresentation(orders_, std::move(powers), std::move(conj));
}

EmulatedCollector::EmulatedCollector(const PcIsomorphism& iso, OpCounter& setup_ctr)
    : target_(iso.target),
      base_(*iso.source),
      backward_(iso.backward),
      coords_(iso.source, iso.backward, setup_ctr) {}

ExponentVector EmulatedCollector::multiply(const ExponentVector& a,
                                           const ExponentVector& b,
                                           OpCounter& ctr) const {
  ExponentVector x = substitute(base_, backward_, a, ctr);
  ExponentVector y = substitute(base_, backward_, b, ctr);
  return coords_.coordinates_of_member(base_.multiply(x, y, ctr), ctr);
}

std::unique_ptr<Multiplier> make_multiplier(MultiplyMode mode,
                                            const PcIsomorphism& iso,
                                            OpCounter& ctr) {
  if (mode == MultiplyMode::kDirect) return std::make_unique<Collector>(*iso.target);
  return std::make_unique<EmulatedCollector>(iso, ctr);
}

ExponentVector reexpress(const Multiplier& m, const ExponentVector& g,
                         const ExponentVector& h, OpCounter& ctr) {
  const PcPresentation& pres = m.presentation();
  if (g.is_identity()) throw InputError("cannot rebase at the identity");
  const std::size_t d = g.depth();
  const Fp p = pres.relative_order(d);
  const Exponent f = static_cast<Exponent>(fp::mul(h[d], fp::inv(g[d], p), p));
  ExponentVector hd = h;
  for (std::size_t k = 0; k < d; ++k) hd[k] = 0;
  ExponentVector r = f ? m.multiply(power(m, g, -Integer(f), ctr), hd, ctr) : hd;
  if (r[d] != 0) fail_invariant("rebasing left a coefficient at the new depth");
  ExponentVector out = h;
  out[d] = f;
  for (std::size_t k = d + 1; k < h.size(); ++k) out[k] = r[k];
  return out;
}

ElementaryTransform elementary_transform(PresentationPtr source,
                                         const Multiplier& m,
                                         const ExponentVector& g, OpCounter& ctr) {
  const PcPresentation& pres = *source;
  pres.check_element(g);
  if (g.is_identity()) throw InputError("elementary transformation needs g != 1");
  const std::size_t n = pres.size();
  const std::size_t d = g.depth();
  ElementaryTransform et;
  et.source = source;
  et.d = d;
  et.g = g;
  if (g == pres.generator(d)) {
    et.target = source;
    et.iso = identity_isomorphism(source);
    return et;
  }
  auto gen = [&](std::size_t i) { return i == d ? g : pres.generator(i); };
  std::vector<ExponentVector> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector v = i == d ? power(m, g, Integer(pres.relative_order(d)), ctr)
                              : pres.power_relation(i);
    powers[i] = reexpress(m, g, v, ctr);
  }
  std::vector<std::vector<ExponentVector>> conj(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ExponentVector v = (i == d || j == d) ? conjugate(m, gen(j), gen(i), ctr)
                                            : pres.conjugate_relation(j, i);
      conj[j].push_back(reexpress(m, g, v, ctr));
    }
  et.target = std::make_shared<const PcPresentation>(pres.relative_orders(),
                                                     std::move(powers), std::move(conj));
  et.iso.source = source;
  et.iso.target = et.target;
  for (std::size_t i = 0; i < n; ++i) {
    et.iso.forward.push_back(i == d ? reexpress(m, g, pres.generator(d), ctr)
                                    : pres.generator(i));
    et.iso.backward.push_back(gen(i));
  }
  return et;
}

PcgsState initial_state(PresentationPtr base) {
  PcgsState st;
  st.weights.assign(base->size(), 1);
  st.iso = identity_isomorphism(base);
  st.pres = std::move(base);
  return st;
}

PcgsState modify_by_element(const PcgsState& state, const ExponentVector& g,
                            unsigned u, MultiplyMode mode, OpCounter& ctr) {
  PcgsState st = state;
  st.pres->check_element(g);
  Collector base(*st.iso.source);
  ExponentVector cur = g;
  while (!cur.is_identity()) {
    const std::size_t d = cur.depth();
    const unsigned wd = st.weights[d];
    // cur = x_d^{e_d} k with k the tail of cur's normal form; the tail is
    // unaffected by replacing x_d.
    ExponentVector k = cur;
    for (std::size_t t = 0; t <= d; ++t) k[t] = 0;
    if (wd < u) {
      if (cur != st.pres->generator(d)) {
        auto mult = make_multiplier(mode, st.iso, ctr);
        ElementaryTransform et = elementary_transform(st.pres, *mult, cur, ctr);
        PcIsomorphism iso{st.iso.source, et.target, {}, {}};
        for (const auto& x : st.iso.forward)
          iso.forward.push_back(reexpress(*mult, cur, x, ctr));
        iso.backward = st.iso.backward;
        iso.backward[d] = map_backward(base, st.iso, cur, ctr);
        st.pres = et.target;
        st.iso = std::move(iso);
      }
      st.weights[d] = u;
      u = wd;
    }
    cur = std::move(k);
  }
  return st;
}

PcgsState exhibit_series(PresentationPtr base,
                         const std::vector<InducedPcgs>& series,
                         MultiplyMode mode, OpCounter& ctr) {
  PcgsState st = initial_state(base);
  for (std::size_t s = 0; s < series.size(); ++s) {
    const unsigned u = static_cast<unsigned>(s + 2);
    for (const auto& y : series[s].entries()) {
      auto mult = make_multiplier(mode, st.iso, ctr);
      ExponentVector ycur = map_forward(*mult, st.iso, y, ctr);
      st = modify_by_element(st, ycur, u, mode, ctr);
    }
  }
  return st;
}

}  // namespace pcdyn
