#include "pcdyn/pcgs.hpp"

#include <algorithm>

#include "pcdyn/error.hpp"
#include "pcdyn/ff/matrix.hpp"

namespace pcdyn {

namespace {

// Left sift: strips y^c off the front while the current depth has an entry.
// `record(d, c)` sees every exponent used.
template <class Lookup, class Record>
ExponentVector sift_impl(const Multiplier& m, Lookup lookup,
                         const ExponentVector& g, OpCounter& ctr, Record record) {
  const PcPresentation& pres = m.presentation();
  ExponentVector r = g;
  while (!r.is_identity()) {
    std::size_t d = r.depth();
    const ExponentVector* y = lookup(d);
    if (!y) break;
    const Fp p = pres.relative_order(d);
    Exponent c = static_cast<Exponent>(fp::mul(r[d], fp::inv((*y)[d], p), p));
    record(d, c);
    r = m.multiply(power(m, *y, -Integer(c), ctr), r, ctr);
  }
  return r;
}

}  // namespace

InducedPcgs InducedPcgs::from_entries(std::size_t n,
                                      std::vector<ExponentVector> entries) {
  InducedPcgs h(n);
  std::size_t last = 0;
  bool first = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.size() != n) throw InputError("induced pcgs entry has wrong length");
    if (e.is_identity()) throw InputError("induced pcgs entry is the identity");
    std::size_t d = e.depth();
    if (!first && d <= last) throw InputError("induced pcgs depths must increase");
    first = false;
    last = d;
    h.slot_[d] = i;
  }
  h.entries_ = std::move(entries);
  return h;
}

InducedPcgs InducedPcgs::tail(std::size_t n, std::size_t k) {
  std::vector<ExponentVector> e;
  for (std::size_t i = k; i < n; ++i) e.push_back(ExponentVector::unit(n, i));
  return from_entries(n, std::move(e));
}

std::vector<std::size_t> InducedPcgs::depths() const {
  std::vector<std::size_t> d;
  for (const auto& e : entries_) d.push_back(e.depth());
  return d;
}

Integer InducedPcgs::order(const PcPresentation& pres) const {
  Integer o = 1;
  for (const auto& e : entries_) o *= pres.relative_order(e.depth());
  return o;
}

ExponentVector sift(const Multiplier& m, const InducedPcgs& h,
                    const ExponentVector& g, OpCounter& ctr) {
  return sift_impl(
      m, [&](std::size_t d) { return h.at_depth(d); }, g, ctr,
      [](std::size_t, Exponent) {});
}

InducedPcgs induced_pcgs(const Multiplier& m,
                         const std::vector<ExponentVector>& gens, OpCounter& ctr) {
  const PcPresentation& pres = m.presentation();
  const std::size_t n = pres.size();
  std::vector<std::optional<ExponentVector>> table(n);
  auto lookup = [&](std::size_t d) -> const ExponentVector* {
    return table[d] ? &*table[d] : nullptr;
  };
  std::vector<ExponentVector> queue;
  for (const auto& g : gens) {
    pres.check_element(g);
    if (!g.is_identity()) queue.push_back(g);
  }
  while (!queue.empty()) {
    ExponentVector g = std::move(queue.back());
    queue.pop_back();
    g = sift_impl(m, lookup, g, ctr, [](std::size_t, Exponent) {});
    if (g.is_identity()) continue;
    const std::size_t d = g.depth();
    const Fp p = pres.relative_order(d);
    if (g[d] != 1) g = power(m, g, Integer(fp::inv(g[d], p)), ctr);
    ExponentVector gp = power(m, g, Integer(p), ctr);
    if (!gp.is_identity()) queue.push_back(std::move(gp));
    for (std::size_t k = 0; k < n; ++k) {
      if (!table[k]) continue;
      ExponentVector c = commutator(m, g, *table[k], ctr);
      if (!c.is_identity()) queue.push_back(std::move(c));
    }
    table[d] = std::move(g);
  }

  std::vector<ExponentVector> entries;
  std::vector<std::size_t> depth_of;
  for (std::size_t d = 0; d < n; ++d)
    if (table[d]) {
      entries.push_back(*table[d]);
      depth_of.push_back(d);
    }
  // Clear each entry's coordinates at the depths of the later entries.
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      Exponent c = entries[i][depth_of[j]];
      if (c == 0) continue;
      entries[i] = m.multiply(entries[i], power(m, entries[j], -Integer(c), ctr), ctr);
    }
  return InducedPcgs::from_entries(n, std::move(entries));
}

std::optional<std::vector<Exponent>> constructive_membership(
    const Multiplier& m, const InducedPcgs& h, const ExponentVector& g,
    OpCounter& ctr) {
  std::vector<Exponent> f(h.size(), 0);
  std::vector<std::size_t> index(h.ambient_size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) index[h[i].depth()] = i;
  ExponentVector r = sift_impl(
      m, [&](std::size_t d) { return h.at_depth(d); }, g, ctr,
      [&](std::size_t d, Exponent c) { f[index[d]] = c; });
  if (!r.is_identity()) return std::nullopt;
  return f;
}

bool is_member(const Multiplier& m, const InducedPcgs& h, const ExponentVector& g,
               OpCounter& ctr) {
  return sift(m, h, g, ctr).is_identity();
}

ExponentVector evaluate_exponents(const Multiplier& m, const InducedPcgs& h,
                                  const std::vector<Exponent>& f, OpCounter& ctr) {
  ExponentVector r = m.presentation().identity();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (f[i] == 0) continue;
    ExponentVector x = power(m, h[i], Integer(f[i]), ctr);
    r = r.is_identity() ? x : m.multiply(r, x, ctr);
  }
  return r;
}

InducedPcgs join(const Multiplier& m, const InducedPcgs& a, const InducedPcgs& b,
                 OpCounter& ctr) {
  std::vector<ExponentVector> g = a.entries();
  g.insert(g.end(), b.entries().begin(), b.entries().end());
  return induced_pcgs(m, g, ctr);
}

bool is_subgroup(const Multiplier& m, const InducedPcgs& a, const InducedPcgs& b,
                 OpCounter& ctr) {
  for (const auto& x : a.entries())
    if (!is_member(m, b, x, ctr)) return false;
  return true;
}

InducedPcgs normal_closure(const Multiplier& m, const InducedPcgs& h,
                           const std::vector<ExponentVector>& conjugators,
                           OpCounter& ctr) {
  InducedPcgs cur = h;
  while (true) {
    std::vector<ExponentVector> extra;
    for (const auto& z : cur.entries())
      for (const auto& c : conjugators) {
        ExponentVector w = conjugate(m, z, c, ctr);
        if (!is_member(m, cur, w, ctr)) extra.push_back(std::move(w));
      }
    if (extra.empty()) return cur;
    extra.insert(extra.end(), cur.entries().begin(), cur.entries().end());
    cur = induced_pcgs(m, extra, ctr);
  }
}

InducedPcgs commutator_subgroup(const Multiplier& m, const InducedPcgs& a,
                                const InducedPcgs& b, OpCounter& ctr) {
  std::vector<ExponentVector> gens;
  for (const auto& x : a.entries())
    for (const auto& y : b.entries()) {
      ExponentVector c = commutator(m, x, y, ctr);
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  InducedPcgs h = induced_pcgs(m, gens, ctr);
  if (h.empty()) return h;
  std::vector<ExponentVector> conj = a.entries();
  conj.insert(conj.end(), b.entries().begin(), b.entries().end());
  return normal_closure(m, h, conj, ctr);
}

InducedPcgs full_pcgs(const PcPresentation& pres) {
  return InducedPcgs::tail(pres.size(), 0);
}

bool is_bijective(const PcEndomorphism& f, OpCounter& ctr) {
  Collector c(f.presentation());
  return induced_pcgs(c, f.images(), ctr).size() == f.presentation().size();
}

PcAutomorphism validate_automorphism(PresentationPtr pres,
                                     std::vector<ExponentVector> images) {
  PcAutomorphism a(std::move(pres), std::move(images));
  OpCounter ctr;
  if (!is_bijective(a, ctr)) throw InputError("images do not generate the group");
  return a;
}

}  // namespace pcdyn
