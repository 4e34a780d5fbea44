// Changing the pcgs of a presentation: isomorphisms between presentations,
// elementary transformations, emulated multiplication, and modification of a
// pcgs by elements so that it exhibits a normal series.

#ifndef PCDYN_TRANSFORM_HPP_
#define PCDYN_TRANSFORM_HPP_

#include <memory>
#include <vector>

#include "pcdyn/collector.hpp"
#include "pcdyn/maps.hpp"
#include "pcdyn/pcgs.hpp"

namespace pcdyn {

// forward[i]: target normal form of the image of source generator i;
// backward[i]: source normal form of the image of target generator i.
struct PcIsomorphism {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<ExponentVector> forward;
  std::vector<ExponentVector> backward;
};

PcIsomorphism identity_isomorphism(PresentationPtr pres);
// source -> target
ExponentVector map_forward(const Multiplier& target, const PcIsomorphism& iso,
                           const ExponentVector& g, OpCounter& ctr);
ExponentVector map_forward(const PcIsomorphism& iso, const ExponentVector& g,
                           OpCounter& ctr);
// target -> source
ExponentVector map_backward(const Multiplier& source, const PcIsomorphism& iso,
                            const ExponentVector& g, OpCounter& ctr);
ExponentVector map_backward(const PcIsomorphism& iso, const ExponentVector& g,
                            OpCounter& ctr);
// a: A -> B, b: B -> C gives A -> C (direct collection in A and C).
PcIsomorphism compose(const PcIsomorphism& a, const PcIsomorphism& b,
                      OpCounter& ctr);
// Both round trips fix every generator.
bool is_valid_isomorphism(const PcIsomorphism& iso, OpCounter& ctr);

// Coordinates with respect to an arbitrary pcgs (y_1, ..., y_k) of a
// subgroup, whose entries are given as normal forms of a base presentation.
// Each y_i must lie outside Y_{i+1} = <y_{i+1}, ..., y_k>, with Y_{i+1}
// normal of prime index in Y_i.
class PcgsCoordinates {
 public:
  PcgsCoordinates(PresentationPtr base, std::vector<ExponentVector> pcgs,
                  OpCounter& ctr);

  const PresentationPtr& base() const { return base_; }
  const std::vector<ExponentVector>& elements() const { return elems_; }
  const std::vector<Exponent>& relative_orders() const { return orders_; }
  // Coordinates of g in the pcgs, or nullopt when g is not in <y_1..y_k>.
  std::optional<ExponentVector> coordinates(const ExponentVector& g,
                                            OpCounter& ctr) const;
  // Same, but g is required to be in the subgroup.
  ExponentVector coordinates_of_member(const ExponentVector& g,
                                       OpCounter& ctr) const;

  // The presentation on y_1..y_k; throws InvariantError when the sequence
  // is not a pcgs.
  PcPresentation presentation(OpCounter& ctr) const;

 private:
  PresentationPtr base_;
  Collector coll_;
  std::vector<ExponentVector> elems_;
  std::vector<Exponent> orders_;
  // suffix_[i] induces Y_{i}; level_[i] is Y_{i+1}'s pcgs plus a
  // representative of y_i's coset at the one new depth new_depth_[i].
  std::vector<InducedPcgs> suffix_;
  std::vector<InducedPcgs> level_;
  std::vector<std::size_t> new_depth_;
};

// Multiplication over a derived presentation performed in the base: pull
// both factors back through the isomorphism, collect in the base and push
// the product forward by constructive membership.
class EmulatedCollector final : public Multiplier {
 public:
  // iso: base -> derived
  EmulatedCollector(const PcIsomorphism& iso, OpCounter& setup_ctr);
  const PcPresentation& presentation() const override { return *target_; }
  ExponentVector multiply(const ExponentVector& a, const ExponentVector& b,
                          OpCounter& ctr) const override;

 private:
  PresentationPtr target_;
  Collector base_;
  std::vector<ExponentVector> backward_;
  PcgsCoordinates coords_;
};

enum class MultiplyMode { kDirect, kEmulate };

// Multiplier for the target of iso (base -> target).
std::unique_ptr<Multiplier> make_multiplier(MultiplyMode mode,
                                            const PcIsomorphism& iso,
                                            OpCounter& ctr);

// Replacing x_d by g (d = depth g) in the pcgs of `source`.
struct ElementaryTransform {
  PresentationPtr source;
  PresentationPtr target;
  std::size_t d = 0;
  ExponentVector g;
  PcIsomorphism iso;  // source -> target
};

// Coordinates of h with respect to (x_1, .., x_{d-1}, g, x_{d+1}, .., x_n);
// m multiplies in g's presentation.
ExponentVector reexpress(const Multiplier& m, const ExponentVector& g,
                         const ExponentVector& h, OpCounter& ctr);
// m multiplies in *source; g must not be the identity.
ElementaryTransform elementary_transform(PresentationPtr source,
                                         const Multiplier& m,
                                         const ExponentVector& g, OpCounter& ctr);

// A presentation Q of G, admissible weights for Q's generators, and an
// isomorphism from a fixed base presentation P to Q.
struct PcgsState {
  PresentationPtr pres;
  std::vector<unsigned> weights;  // 1-based series indices
  PcIsomorphism iso;              // base -> pres
};

PcgsState initial_state(PresentationPtr base);

// Modifies the pcgs of state.pres by g (given in state.pres coordinates)
// with admissible weight u.
PcgsState modify_by_element(const PcgsState& state, const ExponentVector& g,
                            unsigned u, MultiplyMode mode, OpCounter& ctr);

// series[j] is an induced pcgs (base coordinates) of N_{j+2} for a normal
// series G = N_1 > N_2 > ... > N_{l+1} = 1. In the result, the entries with
// weight >= j form a pcgs of N_j.
PcgsState exhibit_series(PresentationPtr base,
                         const std::vector<InducedPcgs>& series,
                         MultiplyMode mode, OpCounter& ctr);

}  // namespace pcdyn

#endif  // PCDYN_TRANSFORM_HPP_
