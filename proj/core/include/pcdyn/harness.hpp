// Brute-force oracles, the generic per-generator order algorithm, random
// automorphisms, the bundled corpus and benchmark reports.

#ifndef PCDYN_HARNESS_HPP_
#define PCDYN_HARNESS_HPP_

#include <functional>
#include <iosfwd>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pcdyn/consistency.hpp"
#include "pcdyn/dynamics.hpp"
#include "pcdyn/maps.hpp"

namespace pcdyn {

// All normal forms, in mixed-radix order (last coordinate fastest). Throws
// BudgetExceeded when |G| > budget.
std::vector<ExponentVector> enumerate_group(
    const PcPresentation& pres, std::uint64_t budget = kDefaultEnumerationBudget);
// Position of v in enumerate_group's order.
std::uint64_t element_index(const PcPresentation& pres, const ExponentVector& v);

using PointMap = std::function<ExponentVector(const ExponentVector&)>;

// Steps until f returns to g; throws BudgetExceeded after `limit` steps.
Integer brute_cycle_length(const PointMap& f, const ExponentVector& g,
                           std::uint64_t limit = kDefaultEnumerationBudget);
// lcm of all cycle lengths of alpha on G.
Integer brute_automorphism_order(const PcAutomorphism& alpha,
                                 std::uint64_t budget = kDefaultEnumerationBudget,
                                 OpCounter* ctr = nullptr);
Integer brute_affine_cycle_length(const AffineMap& a, const ExponentVector& g,
                                  std::uint64_t budget = kDefaultEnumerationBudget);
// Points lying on a cycle of phi.
std::set<ExponentVector> brute_periodic_points(
    const PcEndomorphism& phi, std::uint64_t budget = kDefaultEnumerationBudget);
unsigned brute_preperiod(const PcEndomorphism& phi, const ExponentVector& g,
                         std::uint64_t budget = kDefaultEnumerationBudget);

struct GenericOrderResult {
  Integer order = 1;
  std::uint64_t iterations = 0;  // applications of alpha^K to a generator
  std::uint64_t multiplications = 0;
};

// For each generator in turn, iterate alpha^K on it until it returns, where
// K is the order of alpha on the generators before it.
GenericOrderResult generic_order(const PcAutomorphism& alpha);

ExponentVector random_element(const PcPresentation& pres, std::mt19937_64& rng);
// Product of one to three factors, each an inner automorphism by a random
// element or one of `outer`.
PcAutomorphism sample_automorphism(const PresentationPtr& pres,
                                   const std::vector<PcAutomorphism>& outer,
                                   std::mt19937_64& rng, OpCounter& ctr);

struct CorpusEntry {
  std::string name;
  PresentationPtr pres;
  std::map<std::string, PcAutomorphism> automorphisms;  // NAME.<tag>.aut
  std::map<std::string, PcEndomorphism> endomorphisms;  // NAME.<tag>.endo
  Integer expected_order = 0;                           // from MANIFEST, 0 if absent

  std::vector<PcAutomorphism> automorphism_list() const;
};

// Loads every NAME.pcp in dir with its maps. Automorphisms are checked for
// bijectivity; throws InputError on any invalid file.
std::vector<CorpusEntry> load_corpus(const std::string& dir);
CorpusEntry load_corpus_entry(const std::string& dir, const std::string& name);

struct BenchRecord {
  std::string group;
  std::string instance;
  std::string algorithm;
  Integer result;
  std::uint64_t mults = 0;
  double wall_ms = 0;
};

struct BenchOptions {
  std::vector<std::string> algorithms{"algo1", "generic", "oracle"};
  std::uint64_t budget = kDefaultEnumerationBudget;  // oracle skipped above it
  MultiplyMode mode = MultiplyMode::kDirect;
};

// One record per (named automorphism, algorithm). Throws InvariantError
// naming the instance if algorithms disagree.
std::vector<BenchRecord> run_bench(const std::vector<CorpusEntry>& corpus,
                                   const BenchOptions& opt = {});
void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace pcdyn

#endif  // PCDYN_HARNESS_HPP_
