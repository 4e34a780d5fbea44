#include "pcdyn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "pcdyn/error.hpp"
#include "pcdyn/pcgs.hpp"
#include "text_util.hpp"

namespace pcdyn {

namespace fs = std::filesystem;

namespace {

std::uint64_t checked_size(const PcPresentation& pres, std::uint64_t budget) {
  Integer order = pres.group_order();
  if (order > budget)
    throw BudgetExceeded("group order " + to_string(order) +
                         " exceeds the enumeration budget " + std::to_string(budget));
  return *to_u64(order);
}

}  // namespace

std::vector<ExponentVector> enumerate_group(const PcPresentation& pres,
                                            std::uint64_t budget) {
  const std::uint64_t size = checked_size(pres, budget);
  const std::size_t n = pres.size();
  std::vector<ExponentVector> out;
  out.reserve(size);
  ExponentVector v(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    out.push_back(v);
    for (std::size_t k = n; k-- > 0;) {
      if (++v[k] < pres.relative_order(k)) break;
      v[k] = 0;
    }
  }
  return out;
}

std::uint64_t element_index(const PcPresentation& pres, const ExponentVector& v) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < pres.size(); ++k) idx = idx * pres.relative_order(k) + v[k];
  return idx;
}

Integer brute_cycle_length(const PointMap& f, const ExponentVector& g,
                           std::uint64_t limit) {
  ExponentVector x = f(g);
  std::uint64_t steps = 1;
  while (x != g) {
    if (steps >= limit)
      throw BudgetExceeded("cycle longer than " + std::to_string(limit) + " steps");
    x = f(x);
    ++steps;
  }
  return steps;
}

Integer brute_automorphism_order(const PcAutomorphism& alpha, std::uint64_t budget,
                                 OpCounter* ctr) {
  const PcPresentation& pres = alpha.presentation();
  OpCounter local;
  OpCounter& c = ctr ? *ctr : local;
  auto elems = enumerate_group(pres, budget);
  Collector m(pres);
  std::vector<std::uint64_t> image(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    image[i] = element_index(pres, apply(m, alpha, elems[i], c));
  std::vector<char> seen(elems.size(), 0);
  Integer order = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t j = i; !seen[j]; j = image[j]) {
      seen[j] = 1;
      ++len;
    }
    order = lcm(order, Integer(len));
  }
  return order;
}

Integer brute_affine_cycle_length(const AffineMap& a, const ExponentVector& g,
                                  std::uint64_t budget) {
  const PcPresentation& pres = a.alpha.presentation();
  const std::uint64_t size = checked_size(pres, budget);
  Collector m(pres);
  OpCounter ctr;
  return brute_cycle_length(
      [&](const ExponentVector& x) { return affine_apply(m, a, x, ctr); }, g, size);
}

std::set<ExponentVector> brute_periodic_points(const PcEndomorphism& phi,
                                               std::uint64_t budget) {
  const PcPresentation& pres = phi.presentation();
  auto elems = enumerate_group(pres, budget);
  Collector m(pres);
  OpCounter ctr;
  std::vector<std::uint64_t> image(elems.size());
  std::vector<std::uint64_t> indeg(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    image[i] = element_index(pres, apply(m, phi, elems[i], ctr));
    ++indeg[image[i]];
  }
  // Peel off points nothing maps to; what survives lies on cycles.
  std::vector<std::uint64_t> stack;
  std::vector<char> removed(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    std::uint64_t i = stack.back();
    stack.pop_back();
    removed[i] = 1;
    if (--indeg[image[i]] == 0) stack.push_back(image[i]);
  }
  std::set<ExponentVector> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!removed[i]) out.insert(elems[i]);
  return out;
}

unsigned brute_preperiod(const PcEndomorphism& phi, const ExponentVector& g,
                         std::uint64_t budget) {
  auto periodic = brute_periodic_points(phi, budget);
  Collector m(phi.presentation());
  OpCounter ctr;
  ExponentVector x = g;
  unsigned t = 0;
  while (!periodic.count(x)) {
    x = apply(m, phi, x, ctr);
    ++t;
  }
  return t;
}

GenericOrderResult generic_order(const PcAutomorphism& alpha) {
  const PcPresentation& pres = alpha.presentation();
  Collector m(pres);
  OpCounter ctr;
  GenericOrderResult out;
  PcAutomorphism beta = alpha;
  for (std::size_t i = 0; i < pres.size(); ++i) {
    const ExponentVector g = pres.generator(i);
    ExponentVector x = apply(m, beta, g, ctr);
    std::uint64_t k = 1;
    ++out.iterations;
    while (x != g) {
      x = apply(m, beta, x, ctr);
      ++k;
      ++out.iterations;
    }
    if (k > 1) {
      out.order *= k;
      beta = auto_power(m, beta, k, ctr);
    }
  }
  out.multiplications = ctr.multiplications;
  return out;
}

ExponentVector random_element(const PcPresentation& pres, std::mt19937_64& rng) {
  ExponentVector v(pres.size());
  for (std::size_t k = 0; k < pres.size(); ++k)
    v[k] = static_cast<Exponent>(rng() % pres.relative_order(k));
  return v;
}

PcAutomorphism sample_automorphism(const PresentationPtr& pres,
                                   const std::vector<PcAutomorphism>& outer,
                                   std::mt19937_64& rng, OpCounter& ctr) {
  Collector m(*pres);
  PcAutomorphism result = PcAutomorphism::identity(pres);
  const int factors = 1 + static_cast<int>(rng() % 3);
  for (int f = 0; f < factors; ++f) {
    PcAutomorphism next =
        !outer.empty() && rng() % 2 ? outer[rng() % outer.size()]
                                    : inner_automorphism(m, pres, random_element(*pres, rng), ctr);
    result = compose(m, result, next, ctr);
  }
  return result;
}

std::vector<PcAutomorphism> CorpusEntry::automorphism_list() const {
  std::vector<PcAutomorphism> out;
  for (const auto& [tag, a] : automorphisms) out.push_back(a);
  return out;
}

CorpusEntry load_corpus_entry(const std::string& dir, const std::string& name) {
  CorpusEntry e;
  e.name = name;
  e.pres = std::make_shared<const PcPresentation>(
      load_presentation((fs::path(dir) / (name + ".pcp")).string()));
  const std::string prefix = name + ".";
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) files.push_back(f.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string file = path.filename().string();
    const std::string ext = path.extension().string();
    if (file.rfind(prefix, 0) != 0 || (ext != ".aut" && ext != ".endo")) continue;
    const std::string tag = file.substr(prefix.size(), file.size() - prefix.size() - ext.size());
    if (tag.empty() || tag.find('.') != std::string::npos) continue;
    MapSpec spec = load_map(path.string(), *e.pres);
    try {
      if (ext == ".aut")
        e.automorphisms.emplace(tag, validate_automorphism(e.pres, spec.images));
      else
        e.endomorphisms.emplace(tag, PcEndomorphism(e.pres, spec.images));
    } catch (const InputError& err) {
      throw InputError(path.string() + ": " + err.what());
    }
  }
  const fs::path manifest = fs::path(dir) / "MANIFEST";
  if (fs::exists(manifest)) {
    std::string body = txt::read_file(manifest.string());
    for (auto [lineno, line] : txt::logical_lines(body)) {
      auto toks = txt::split_ws(line);
      if (toks.size() == 2 && toks[0] == name) e.expected_order = Integer(std::string(toks[1]));
    }
  }
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("not a corpus directory: " + dir);
  std::vector<std::string> names;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.path().extension() == ".pcp") names.push_back(f.path().stem().string());
  std::sort(names.begin(), names.end());
  std::vector<CorpusEntry> out;
  for (const auto& n : names) out.push_back(load_corpus_entry(dir, n));
  return out;
}

std::vector<BenchRecord> run_bench(const std::vector<CorpusEntry>& corpus,
                                   const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (const auto& entry : corpus) {
    for (const auto& [tag, alpha] : entry.automorphisms) {
      std::vector<BenchRecord> rows;
      for (const auto& algo : opt.algorithms) {
        BenchRecord rec{entry.name, tag, algo, 0, 0, 0};
        auto t0 = clock::now();
        if (algo == "algo1") {
          DynamicsOptions d;
          d.mode = opt.mode;
          d.certify = false;
          DynamicsReport rep = automorphism_order_report(alpha, d);
          rec.result = rep.result;
          rec.mults = rep.multiplications;
        } else if (algo == "generic") {
          GenericOrderResult g = generic_order(alpha);
          rec.result = g.order;
          rec.mults = g.multiplications;
        } else if (algo == "oracle") {
          if (entry.pres->group_order() > opt.budget) continue;
          OpCounter ctr;
          rec.result = brute_automorphism_order(alpha, opt.budget, &ctr);
          rec.mults = ctr.multiplications;
        } else {
          throw InputError("unknown algorithm '" + algo + "'");
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        rows.push_back(rec);
      }
      for (const auto& r : rows)
        if (r.result != rows.front().result)
          fail_invariant("algorithms disagree on " + entry.name + "/" + tag + ": " +
                         rows.front().algorithm + " gives " + to_string(rows.front().result) +
                         ", " + r.algorithm + " gives " + to_string(r.result));
      out.insert(out.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "group,instance,algorithm,result,mults,wall_ms\n";
  for (const auto& r : records)
    os << r.group << ',' << r.instance << ',' << r.algorithm << ',' << to_string(r.result)
       << ',' << r.mults << ',' << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
}

}  // namespace pcdyn
