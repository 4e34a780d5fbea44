#include "pcdyn/collector.hpp"

#include <deque>
#include <vector>

#include "pcdyn/error.hpp"

namespace pcdyn {

namespace {

using SparseWord = PcPresentation::SparseWord;
using Letter = SparseWord::value_type;

struct Frame {
  const Letter* begin;
  const Letter* end;
  const Letter* pos;
  std::uint32_t reps;
};

// Collection from the left. The collected part lives in `r`; words still to
// be multiplied onto it sit on a stack of frames.
class LeftCollector {
 public:
  LeftCollector(const PcPresentation& pres, std::vector<Exponent>& r,
                OpCounter& ctr)
      : pres_(pres), r_(r), ctr_(ctr) {}

  void push(const SparseWord& w, std::uint32_t reps) {
    if (w.empty() || reps == 0) return;
    stack_.push_back({w.data(), w.data() + w.size(), w.data(), reps});
  }

  void run() {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const Letter letter = *f.pos;
      if (++f.pos == f.end) {
        if (--f.reps == 0)
          stack_.pop_back();
        else
          f.pos = f.begin;
      }
      multiply_generator(letter.first, letter.second);
    }
  }

 private:
  // r <- r * x_g^e with 0 < e < p_g.
  void multiply_generator(std::uint32_t g, Exponent e) {
    ++ctr_.bit_ops_estimate;
    const std::size_t n = pres_.size();
    const Exponent p = pres_.relative_order(g);
    bool tail = false, commuting = true;
    for (std::size_t k = g + 1; k < n; ++k) {
      if (r_[k] == 0) continue;
      tail = true;
      if (!pres_.conjugate_is_trivial(k, g)) {
        commuting = false;
        break;
      }
    }

    if (commuting) {
      // x_g commutes with the uncollected tail, so the exponents just add.
      std::uint64_t s = std::uint64_t{r_[g]} + e;
      if (s < p) {
        r_[g] = static_cast<Exponent>(s);
        return;
      }
      r_[g] = static_cast<Exponent>(s - p);
      if (tail) {
        SparseWord& t = owned_.emplace_back();
        for (std::size_t k = g + 1; k < n; ++k) {
          if (r_[k]) t.emplace_back(static_cast<std::uint32_t>(k), r_[k]);
          r_[k] = 0;
        }
        push(t, 1);
      }
      push(pres_.power_word(g), 1);
      return;
    }

    // prefix x_g^{r_g} tail * x_g = prefix x_g^{r_g+1} tail^{x_g}; the other
    // e-1 copies of x_g wait underneath.
    if (e > 1) push(pres_.conjugate_word(g, g), e - 1);
    for (std::size_t k = n; k-- > g + 1;) {
      if (r_[k] == 0) continue;
      push(pres_.conjugate_word(k, g), r_[k]);
      r_[k] = 0;
    }
    if (r_[g] + 1 == p) {
      r_[g] = 0;
      push(pres_.power_word(g), 1);
    } else {
      ++r_[g];
    }
  }

  const PcPresentation& pres_;
  std::vector<Exponent>& r_;
  OpCounter& ctr_;
  std::vector<Frame> stack_;
  std::deque<SparseWord> owned_;
};

}  // namespace

ExponentVector Collector::multiply(const ExponentVector& a,
                                   const ExponentVector& b,
                                   OpCounter& ctr) const {
  ++ctr.multiplications;
  std::vector<Exponent> r = a.coords();
  SparseWord bw;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k]) bw.emplace_back(static_cast<std::uint32_t>(k), b[k]);
  LeftCollector c(pres_, r, ctr);
  c.push(bw, 1);
  c.run();
  return ExponentVector(std::move(r));
}

ExponentVector inverse(const Multiplier& m, const ExponentVector& a,
                       OpCounter& ctr) {
  const PcPresentation& pres = m.presentation();
  // Solve a * y = 1 one depth at a time; y's depths increase, so y is
  // assembled directly in normal form.
  ExponentVector y = pres.identity();
  ExponentVector r = a;
  while (!r.is_identity()) {
    std::size_t d = r.depth();
    Exponent c = pres.relative_order(d) - r[d];
    y[d] = c;
    r = m.multiply(r, ExponentVector::unit(pres.size(), d, c), ctr);
  }
  return y;
}

ExponentVector power(const Multiplier& m, const ExponentVector& a,
                     const Integer& e, OpCounter& ctr) {
  const PcPresentation& pres = m.presentation();
  if (e == 0 || a.is_identity()) return pres.identity();
  ExponentVector base = e < 0 ? inverse(m, a, ctr) : a;
  Integer k = e < 0 ? Integer(-e) : e;
  ExponentVector result = pres.identity();
  bool have_result = false;
  const auto bits = boost::multiprecision::msb(k);
  for (std::size_t i = 0; i <= bits; ++i) {
    if (boost::multiprecision::bit_test(k, i)) {
      if (have_result) {
        result = m.multiply(result, base, ctr);
      } else {
        result = base;
        have_result = true;
      }
    }
    if (i < bits) base = m.multiply(base, base, ctr);
  }
  return result;
}

ExponentVector conjugate(const Multiplier& m, const ExponentVector& a,
                         const ExponentVector& b, OpCounter& ctr) {
  ExponentVector bi = inverse(m, b, ctr);
  return m.multiply(m.multiply(bi, a, ctr), b, ctr);
}

ExponentVector commutator(const Multiplier& m, const ExponentVector& a,
                          const ExponentVector& b, OpCounter& ctr) {
  ExponentVector ai = inverse(m, a, ctr);
  ExponentVector bi = inverse(m, b, ctr);
  return m.multiply(m.multiply(m.multiply(ai, bi, ctr), a, ctr), b, ctr);
}

ExponentVector evaluate_word(const Multiplier& m, const Word& w,
                             OpCounter& ctr) {
  const PcPresentation& pres = m.presentation();
  ExponentVector r = pres.identity();
  for (auto [g, e] : w.letters) {
    if (g >= pres.size())
      throw InputError("word letter refers to generator " +
                       std::to_string(g + 1) + " of " +
                       std::to_string(pres.size()));
    ExponentVector x = power(m, pres.generator(g), Integer(e), ctr);
    r = r.is_identity() ? x : m.multiply(r, x, ctr);
  }
  return r;
}

ExponentVector substitute(const Multiplier& m,
                          const std::vector<ExponentVector>& images,
                          const ExponentVector& exponents, OpCounter& ctr) {
  ExponentVector r = m.presentation().identity();
  bool first = true;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    ExponentVector x = exponents[k] == 1
                           ? images[k]
                           : power(m, images[k], Integer(exponents[k]), ctr);
    r = first ? x : m.multiply(r, x, ctr);
    first = false;
  }
  return r;
}

ExponentVector multiply(const PcPresentation& pres, const ExponentVector& a,
                        const ExponentVector& b, OpCounter& ctr) {
  return Collector(pres).multiply(a, b, ctr);
}
ExponentVector inverse(const PcPresentation& pres, const ExponentVector& a,
                       OpCounter& ctr) {
  return inverse(Collector(pres), a, ctr);
}
ExponentVector power(const PcPresentation& pres, const ExponentVector& a,
                     const Integer& e, OpCounter& ctr) {
  return power(Collector(pres), a, e, ctr);
}
ExponentVector conjugate(const PcPresentation& pres, const ExponentVector& a,
                         const ExponentVector& b, OpCounter& ctr) {
  return conjugate(Collector(pres), a, b, ctr);
}
ExponentVector commutator(const PcPresentation& pres, const ExponentVector& a,
                          const ExponentVector& b, OpCounter& ctr) {
  return commutator(Collector(pres), a, b, ctr);
}
ExponentVector evaluate_word(const PcPresentation& pres, const Word& w,
                             OpCounter& ctr) {
  return evaluate_word(Collector(pres), w, ctr);
}

}  // namespace pcdyn
