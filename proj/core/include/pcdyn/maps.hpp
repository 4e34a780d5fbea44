// Endomorphisms, automorphisms and affine maps x -> t * alpha(x) of a pc
// group, all given by the images of the pcgs generators.

#ifndef PCDYN_MAPS_HPP_
#define PCDYN_MAPS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcdyn/collector.hpp"
#include "pcdyn/integer.hpp"
#include "pcdyn/presentation.hpp"

namespace pcdyn {

using PresentationPtr = std::shared_ptr<const PcPresentation>;

class PcEndomorphism {
 public:
  // Throws InputError unless every image is a normal form and every defining
  // relation is preserved.
  PcEndomorphism(PresentationPtr pres, std::vector<ExponentVector> images);
  PcEndomorphism(PresentationPtr pres, std::vector<ExponentVector> images,
                 const Multiplier& m);

  static PcEndomorphism identity(PresentationPtr pres);
  // Skips relation checks; for images produced by already-validated maps.
  static PcEndomorphism trusted(PresentationPtr pres,
                                std::vector<ExponentVector> images);

  const PcPresentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }
  const std::vector<ExponentVector>& images() const { return images_; }
  const ExponentVector& image(std::size_t i) const { return images_[i]; }
  bool is_identity() const;

  friend bool operator==(const PcEndomorphism& a, const PcEndomorphism& b) {
    return *a.pres_ == *b.pres_ && a.images_ == b.images_;
  }

 protected:
  struct Trusted {};
  PcEndomorphism(Trusted, PresentationPtr pres, std::vector<ExponentVector> images)
      : pres_(std::move(pres)), images_(std::move(images)) {}

 private:
  PresentationPtr pres_;
  std::vector<ExponentVector> images_;
};

// An endomorphism that is also bijective. Construction checks relation
// preservation only; bijectivity is checked by is_bijective() (see
// pcgs.hpp), which the loaders call.
class PcAutomorphism : public PcEndomorphism {
 public:
  using PcEndomorphism::PcEndomorphism;
  explicit PcAutomorphism(PcEndomorphism e) : PcEndomorphism(std::move(e)) {}
  static PcAutomorphism identity(PresentationPtr pres) {
    return PcAutomorphism(PcEndomorphism::identity(std::move(pres)));
  }
  static PcAutomorphism trusted(PresentationPtr pres,
                                std::vector<ExponentVector> images) {
    return PcAutomorphism(PcEndomorphism::trusted(std::move(pres), std::move(images)));
  }
};

struct AffineMap {
  ExponentVector t;
  PcAutomorphism alpha;
};

// Relation preservation of arbitrary image tuples.
bool preserves_relations(const Multiplier& m,
                         const std::vector<ExponentVector>& images,
                         OpCounter& ctr, std::string* failure = nullptr);

ExponentVector apply(const Multiplier& m, const PcEndomorphism& f,
                     const ExponentVector& g, OpCounter& ctr);
ExponentVector apply(const PcEndomorphism& f, const ExponentVector& g,
                     OpCounter& ctr);

// a1 o a2, i.e. x -> a1(a2(x))
PcEndomorphism compose(const Multiplier& m, const PcEndomorphism& a1,
                       const PcEndomorphism& a2, OpCounter& ctr);
PcAutomorphism compose(const Multiplier& m, const PcAutomorphism& a1,
                       const PcAutomorphism& a2, OpCounter& ctr);
PcEndomorphism compose(const PcEndomorphism& a1, const PcEndomorphism& a2,
                       OpCounter& ctr);
PcAutomorphism compose(const PcAutomorphism& a1, const PcAutomorphism& a2,
                       OpCounter& ctr);

// e >= 0; e = 0 gives the identity.
PcEndomorphism endo_power(const Multiplier& m, const PcEndomorphism& a,
                          const Integer& e, OpCounter& ctr);
PcAutomorphism auto_power(const Multiplier& m, const PcAutomorphism& a,
                          const Integer& e, OpCounter& ctr);
PcAutomorphism auto_power(const PcAutomorphism& a, const Integer& e,
                          OpCounter& ctr);

ExponentVector affine_apply(const Multiplier& m, const AffineMap& a,
                            const ExponentVector& g, OpCounter& ctr);
ExponentVector affine_apply(const AffineMap& a, const ExponentVector& g,
                            OpCounter& ctr);
// A1 o A2 = (t1 * alpha1(t2), alpha1 o alpha2)
AffineMap affine_compose(const Multiplier& m, const AffineMap& a1,
                         const AffineMap& a2, OpCounter& ctr);
AffineMap affine_compose(const AffineMap& a1, const AffineMap& a2,
                         OpCounter& ctr);
// e >= 1
AffineMap affine_power(const Multiplier& m, const AffineMap& a,
                       const Integer& e, OpCounter& ctr);
AffineMap affine_power(const AffineMap& a, const Integer& e, OpCounter& ctr);

// x -> h x h^{-1}
PcAutomorphism inner_automorphism(const Multiplier& m, PresentationPtr pres,
                                  const ExponentVector& h, OpCounter& ctr);
PcAutomorphism inner_automorphism(PresentationPtr pres, const ExponentVector& h,
                                  OpCounter& ctr);

// .aut text: lines `img <i> = [e_1,...,e_n]` (1-based i, every generator
// exactly once) and optionally `t = [...]`. '#' starts a comment.
struct MapSpec {
  std::vector<ExponentVector> images;
  std::optional<ExponentVector> t;
};
MapSpec parse_map(std::string_view text, const PcPresentation& pres);
MapSpec load_map(const std::string& path, const PcPresentation& pres);
std::string format_map(const std::vector<ExponentVector>& images,
                       const std::optional<ExponentVector>& t = std::nullopt);

}  // namespace pcdyn

#endif  // PCDYN_MAPS_HPP_
