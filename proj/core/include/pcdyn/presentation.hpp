// Refined polycyclic presentations and the normal-form coordinates of their
// elements.
//
// Generators are indexed from 0 in the C++ API. The textual formats (.pcp,
// .aut and the bracketed vector syntax) are 1-based, as in the literature.

#ifndef PCDYN_PRESENTATION_HPP_
#define PCDYN_PRESENTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcdyn/integer.hpp"

namespace pcdyn {

using Exponent = std::uint32_t;

// Coordinates e_1..e_n of x_1^{e_1} ... x_n^{e_n}, with 0 <= e_k < p_k.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> init) : e_(init) {}
  explicit ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t n, std::size_t k, Exponent e = 1) {
    ExponentVector v(n);
    v.e_[k] = e;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t k) const { return e_[k]; }
  Exponent& operator[](std::size_t k) { return e_[k]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<Exponent>& coords() const { return e_; }

  bool is_identity() const;
  // Index of the first nonzero coordinate; size() for the identity.
  std::size_t depth() const;
  Exponent leading_exponent() const;

  // "[1,0,2]"
  std::string to_string() const;
  static ExponentVector parse(std::string_view text);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

// A word x_{g_1}^{e_1} x_{g_2}^{e_2} ... with arbitrary integer exponents;
// generator indices are 0-based.
struct Word {
  std::vector<std::pair<std::size_t, std::int64_t>> letters;
};

// A refined polycyclic presentation <x_1..x_n | R>.
//
// Power relations x_i^{p_i} = w_i and conjugate relations x_j^{x_i} =
// x_i^{-1} x_j x_i = w_ij (i < j) are stored as normal forms over generators
// of index > i. Trivial conjugate relations are the default. The object is
// immutable once built.
class PcPresentation {
 public:
  // Collection needs words as sparse (generator, exponent) lists.
  using SparseWord = std::vector<std::pair<std::uint32_t, Exponent>>;

  // powers[i] is the normal form of x_i^{p_i}; conjugates[j][i] (i < j) the
  // normal form of x_j^{x_i}. Empty outer vectors mean "all trivial".
  PcPresentation(std::vector<Exponent> relative_orders,
                 std::vector<ExponentVector> powers = {},
                 std::vector<std::vector<ExponentVector>> conjugates = {});

  std::size_t size() const { return orders_.size(); }
  Exponent relative_order(std::size_t i) const { return orders_[i]; }
  const std::vector<Exponent>& relative_orders() const { return orders_; }
  const ExponentVector& power_relation(std::size_t i) const {
    return powers_[i];
  }
  const ExponentVector& conjugate_relation(std::size_t j, std::size_t i) const {
    return conjugates_[j][i];
  }
  bool conjugate_is_trivial(std::size_t j, std::size_t i) const {
    return trivial_conj_[j * size() + i] != 0;
  }
  Integer group_order() const;

  ExponentVector identity() const { return ExponentVector(size()); }
  ExponentVector generator(std::size_t i) const {
    return ExponentVector::unit(size(), i);
  }
  bool is_valid(const ExponentVector& v) const;
  // Throws InputError when v is not a normal form for this presentation.
  void check_element(const ExponentVector& v) const;

  // Collector tables.
  const SparseWord& power_word(std::size_t i) const { return power_words_[i]; }
  const SparseWord& conjugate_word(std::size_t j, std::size_t i) const {
    return conj_words_[j * size() + i];
  }

  friend bool operator==(const PcPresentation& a, const PcPresentation& b) {
    return a.orders_ == b.orders_ && a.powers_ == b.powers_ &&
           a.conjugates_ == b.conjugates_;
  }

 private:
  std::vector<Exponent> orders_;
  std::vector<ExponentVector> powers_;
  std::vector<std::vector<ExponentVector>> conjugates_;
  std::vector<char> trivial_conj_;
  std::vector<SparseWord> power_words_;
  std::vector<SparseWord> conj_words_;
};

// .pcp text format:
//   pcpres 1
//   n <count>
//   orders p_1 ... p_n
//   pow <i> = <word>          x_i^{p_i}
//   conj <j> <i> = <word>     x_j^{x_i}, i < j
// where <word> is a list of atoms g^e (e defaults to 1) in increasing
// generator order. '#' starts a comment.
PcPresentation parse_presentation(std::string_view text);
PcPresentation load_presentation(const std::string& path);
std::string format_presentation(const PcPresentation& pres);

// "x1^2 x3" style rendering of a normal form (empty string for identity).
std::string format_word(const ExponentVector& v);

}  // namespace pcdyn

template <>
struct std::hash<pcdyn::ExponentVector> {
  std::size_t operator()(const pcdyn::ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : v) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }
};

#endif  // PCDYN_PRESENTATION_HPP_
