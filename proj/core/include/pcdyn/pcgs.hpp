// Induced pcgs of subgroups: sifting, construction, membership.

#ifndef PCDYN_PCGS_HPP_
#define PCDYN_PCGS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pcdyn/collector.hpp"
#include "pcdyn/maps.hpp"
#include "pcdyn/presentation.hpp"

namespace pcdyn {

// Subgroup given by elements of strictly increasing depth. Sequences built by
// induced_pcgs() are canonical: leading exponents are 1 and every entry has
// coordinate 0 at the depths of the other entries, so two canonical
// sequences are equal iff their subgroups are.
class InducedPcgs {
 public:
  InducedPcgs() = default;
  explicit InducedPcgs(std::size_t ambient_size)
      : n_(ambient_size), slot_(ambient_size, kNone) {}
  // Throws InputError unless the depths strictly increase and no entry is
  // the identity.
  static InducedPcgs from_entries(std::size_t ambient_size,
                                  std::vector<ExponentVector> entries);
  // x_k, x_{k+1}, ..., x_{n-1}
  static InducedPcgs tail(std::size_t ambient_size, std::size_t k);

  std::size_t ambient_size() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<ExponentVector>& entries() const { return entries_; }
  const ExponentVector& operator[](std::size_t i) const { return entries_[i]; }
  // Entry whose depth is d, if any.
  const ExponentVector* at_depth(std::size_t d) const {
    return slot_[d] == kNone ? nullptr : &entries_[slot_[d]];
  }
  std::vector<std::size_t> depths() const;
  Integer order(const PcPresentation& pres) const;

  friend bool operator==(const InducedPcgs& a, const InducedPcgs& b) {
    return a.entries_ == b.entries_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t n_ = 0;
  std::vector<ExponentVector> entries_;
  std::vector<std::size_t> slot_;
};

// Reduces g against the entries: returns the identity iff g is a product of
// entry powers in depth order, otherwise a residue whose depth carries no
// entry.
ExponentVector sift(const Multiplier& m, const InducedPcgs& h,
                    const ExponentVector& g, OpCounter& ctr);

// Canonical induced pcgs of the subgroup generated by `gens`.
InducedPcgs induced_pcgs(const Multiplier& m,
                         const std::vector<ExponentVector>& gens, OpCounter& ctr);

// Exponents f with g = h[0]^{f_0} h[1]^{f_1} ..., or nullopt if g is not in
// the subgroup.
std::optional<std::vector<Exponent>> constructive_membership(
    const Multiplier& m, const InducedPcgs& h, const ExponentVector& g,
    OpCounter& ctr);
bool is_member(const Multiplier& m, const InducedPcgs& h, const ExponentVector& g,
               OpCounter& ctr);
// Folds exponents over the entries.
ExponentVector evaluate_exponents(const Multiplier& m, const InducedPcgs& h,
                                  const std::vector<Exponent>& f, OpCounter& ctr);

// <a, b>
InducedPcgs join(const Multiplier& m, const InducedPcgs& a, const InducedPcgs& b,
                 OpCounter& ctr);
bool is_subgroup(const Multiplier& m, const InducedPcgs& a, const InducedPcgs& b,
                 OpCounter& ctr);  // a <= b
// Smallest subgroup containing h that is normalised by every element of
// `conjugators`.
InducedPcgs normal_closure(const Multiplier& m, const InducedPcgs& h,
                           const std::vector<ExponentVector>& conjugators,
                           OpCounter& ctr);
// Subgroup generated by all [x, y] (x in a, y in b), closed under
// conjugation by the entries of a and b. For a, b normal this is [a, b].
InducedPcgs commutator_subgroup(const Multiplier& m, const InducedPcgs& a,
                                const InducedPcgs& b, OpCounter& ctr);

InducedPcgs full_pcgs(const PcPresentation& pres);

// The images generate the whole group.
bool is_bijective(const PcEndomorphism& f, OpCounter& ctr);
// Relation check (done at construction) plus bijectivity; throws InputError.
PcAutomorphism validate_automorphism(PresentationPtr pres,
                                     std::vector<ExponentVector> images);

}  // namespace pcdyn

#endif  // PCDYN_PCGS_HPP_
