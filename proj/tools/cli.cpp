#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "pcdyn/consistency.hpp"
#include "pcdyn/dynamics.hpp"
#include "pcdyn/error.hpp"
#include "pcdyn/harness.hpp"
#include "pcdyn/lg_series.hpp"
#include "pcdyn/pcgs.hpp"

namespace pcdyn::cli {

namespace {

using nlohmann::json;

json json_int(const Integer& v) {
  if (auto u = to_u64(v)) return *u;
  return to_string(v);
}

json level_data(const DynamicsReport& rep) {
  json levels = json::array();
  for (const auto& l : rep.levels) levels.push_back({l.prime, l.dim, json_int(l.value)});
  return levels;
}

struct Common {
  std::string mode = "direct";
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool debug = false;

  MultiplyMode multiply_mode() const {
    return mode == "emulate" ? MultiplyMode::kEmulate : MultiplyMode::kDirect;
  }
  DynamicsOptions dynamics() const {
    DynamicsOptions o;
    o.mode = multiply_mode();
    o.debug_invariants = debug;
    return o;
  }
};

PresentationPtr load_pres(const std::string& path) {
  return std::make_shared<const PcPresentation>(load_presentation(path));
}

ExponentVector parse_element(const std::string& text, const PcPresentation& pres) {
  ExponentVector v = ExponentVector::parse(text);
  pres.check_element(v);
  return v;
}

void print_images(std::ostream& out, const std::vector<ExponentVector>& images) {
  for (std::size_t i = 0; i < images.size(); ++i)
    out << "img " << i + 1 << " = " << images[i].to_string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism orders and affine cycle lengths on finite solvable groups"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--mode", common.mode, "multiplication in derived presentations")
      ->check(CLI::IsMember({"direct", "emulate"}));
  app.add_option("--budget", common.budget, "enumeration cap for brute-force work");
  app.add_flag("--debug-invariants", common.debug, "check loop invariants at runtime");

  std::string pcp, map, g_text, t_text, corpus, algos = "algo1,generic,oracle", csv;
  auto* check = app.add_subcommand("check", "consistency verdict of a presentation");
  check->add_option("pcp", pcp)->required();
  auto* normalize = app.add_subcommand("normalize", "presentation refining the LG-series");
  normalize->add_option("pcp", pcp)->required();
  auto* order = app.add_subcommand("order", "order of an automorphism");
  order->add_option("pcp", pcp)->required();
  order->add_option("aut", map)->required();
  auto* cycle = app.add_subcommand("cycle", "cycle length of g under x -> t alpha(x)");
  cycle->add_option("pcp", pcp)->required();
  cycle->add_option("aut", map)->required();
  cycle->add_option("--g", g_text, "element, e.g. [1,0,0]");
  cycle->add_option("--t", t_text, "translation (defaults to the t line of the map file)");
  auto* pre = app.add_subcommand("preperiod", "preperiod of g under an endomorphism");
  pre->add_option("pcp", pcp)->required();
  pre->add_option("endo", map)->required();
  pre->add_option("--g", g_text)->required();
  auto* oracle = app.add_subcommand("oracle", "brute-force order or cycle length");
  oracle->add_option("pcp", pcp)->required();
  oracle->add_option("aut", map)->required();
  oracle->add_option("--g", g_text);
  oracle->add_option("--t", t_text);
  auto* bench = app.add_subcommand("bench", "compare algorithms over a corpus");
  bench->add_option("--corpus", corpus)->required();
  bench->add_option("--algos", algos);
  bench->add_option("--out", csv, "CSV path (stdout if omitted)");
  for (auto* sub : {check, normalize, order, cycle, pre, oracle, bench}) {
    sub->add_option("--mode", common.mode)->check(CLI::IsMember({"direct", "emulate"}));
    sub->add_option("--budget", common.budget);
    sub->add_flag("--debug-invariants", common.debug);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*check) {
      auto p = load_pres(pcp);
      ConsistencyReport rep = check_consistency(*p, common.budget);
      out << json{{"verdict", to_string(rep.verdict)},
                  {"elements", rep.elements},
                  {"witness", rep.witness}}.dump()
          << '\n';
      if (rep.verdict == ConsistencyVerdict::kFail) return kInputError;
      if (rep.verdict == ConsistencyVerdict::kUnchecked) return kBudgetExceeded;
      return kOk;
    }
    if (*normalize) {
      auto p = load_pres(pcp);
      OpCounter ctr;
      LgNormalization N = lg_normalize(p, common.multiply_mode(), ctr);
      out << format_presentation(*N.pres) << "weights";
      for (auto w : N.lg.final_weights) out << ' ' << w;
      out << "\n# forward: images of the input generators\n";
      print_images(out, N.iso.forward);
      out << "# backward: images of the normalised generators\n";
      print_images(out, N.iso.backward);
      return kOk;
    }
    if (*order) {
      auto p = load_pres(pcp);
      MapSpec spec = load_map(map, *p);
      PcAutomorphism a = validate_automorphism(p, spec.images);
      DynamicsReport rep = automorphism_order_report(a, common.dynamics());
      out << json{{"order", json_int(rep.result)},
                  {"level_data", level_data(rep)},
                  {"multiplications_used", rep.multiplications},
                  {"certified", rep.certified}}.dump()
          << '\n';
      return kOk;
    }
    if (*cycle) {
      auto p = load_pres(pcp);
      MapSpec spec = load_map(map, *p);
      PcAutomorphism a = validate_automorphism(p, spec.images);
      ExponentVector t = !t_text.empty() ? parse_element(t_text, *p)
                                         : spec.t.value_or(p->identity());
      ExponentVector g = g_text.empty() ? p->identity() : parse_element(g_text, *p);
      DynamicsReport rep = affine_cycle_length_report({t, a}, g, common.dynamics());
      out << json{{"cycle_length", json_int(rep.result)},
                  {"level_data", level_data(rep)},
                  {"multiplications_used", rep.multiplications},
                  {"certified", rep.certified}}.dump()
          << '\n';
      return kOk;
    }
    if (*pre) {
      auto p = load_pres(pcp);
      MapSpec spec = load_map(map, *p);
      PcEndomorphism phi(p, spec.images);
      OpCounter ctr;
      InducedPcgs per = periodic_subgroup(phi, ctr);
      unsigned t = endo_preperiod(phi, per, parse_element(g_text, *p), ctr);
      out << json{{"preperiod", t},
                  {"bound", preperiod_bound(*p)},
                  {"periodic_subgroup_order", json_int(per.order(*p))},
                  {"multiplications_used", ctr.multiplications}}.dump()
          << '\n';
      return kOk;
    }
    if (*oracle) {
      auto p = load_pres(pcp);
      MapSpec spec = load_map(map, *p);
      PcAutomorphism a = validate_automorphism(p, spec.images);
      if (g_text.empty() && t_text.empty() && !spec.t) {
        out << json{{"order", json_int(brute_automorphism_order(a, common.budget))}}.dump() << '\n';
      } else {
        ExponentVector t = !t_text.empty() ? parse_element(t_text, *p)
                                           : spec.t.value_or(p->identity());
        ExponentVector g = g_text.empty() ? p->identity() : parse_element(g_text, *p);
        out << json{{"cycle_length", json_int(brute_affine_cycle_length({t, a}, g, common.budget))}}
                   .dump()
            << '\n';
      }
      return kOk;
    }
    if (*bench) {
      BenchOptions opt;
      opt.algorithms.clear();
      std::stringstream ss(algos);
      for (std::string a; std::getline(ss, a, ',');)
        if (!a.empty()) opt.algorithms.push_back(a);
      opt.budget = common.budget;
      opt.mode = common.multiply_mode();
      auto records = run_bench(load_corpus(corpus), opt);
      if (csv.empty()) {
        write_bench_csv(out, records);
      } else {
        std::ofstream f(csv);
        if (!f) throw InputError("cannot write " + csv);
        write_bench_csv(f, records);
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError& e) {
    err << "invariant breach: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  return kInputError;
}

}  // namespace pcdyn::cli
