// Command-line front end: build/inspect rough set algebras from relation
// files, run the verification suite, export Hasse diagrams, and search for
// countermodels of formulas over the finite model class.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nforge/algebra_json.hpp"
#include "nforge/approx.hpp"
#include "nforge/hasse_dot.hpp"
#include "nforge/heyting.hpp"
#include "nforge/logic.hpp"
#include "nforge/relation_io.hpp"
#include "nforge/roughsets.hpp"

using namespace nforge;
using nlohmann::json;

namespace {

int enumeration_bound() {
  if (const char* env = std::getenv("NELSON_FORGE_MAX_N")) {
    try {
      int b = std::stoi(env);
      if (b >= 1) return b;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid NELSON_FORGE_MAX_N ('" << env
              << "')\n";
  }
  return 5;
}

void warn_closure(const RelationLoad& load) {
  if (load.added.empty()) return;
  std::cerr << "warning: closure added pairs:";
  for (auto [i, j] : load.added) {
    std::cerr << " (" << i << "," << j << ")";
  }
  std::cerr << "\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << content;
}

json valuation_json(const NelsonAlgebra& a, const Valuation& v) {
  json out = json::object();
  for (const auto& [atom, idx] : v) {
    const PairElement& e = a.element(idx);
    out[atom] = json::array({e.left.members(), e.right.members()});
  }
  return out;
}

std::string valuation_text(const NelsonAlgebra& a, const Valuation& v) {
  std::string out;
  for (const auto& [atom, idx] : v) {
    out += "  " + atom + " = " + a.element(idx).to_string() + "\n";
  }
  return out;
}

// --- build ------------------------------------------------------------------

json effectiveness_json(const QuasiOrder& r, const NelsonAlgebra& algebra) {
  EffectivenessReport eff = effectiveness_criteria(r);
  json rep;
  rep["universe"] = r.size();
  rep["closed_points"] = r.closed_points().members();
  rep["effective"] = eff.effective();
  rep["semi_simple"] = is_semi_simple(algebra);
  rep["carrier_size"] = algebra.size();
  return rep;
}

int run_build(const std::string& relation_path, const std::string& rep_name,
              const std::string& out_path, bool closure, bool json_only) {
  RelationLoad load = load_relation_file(relation_path, closure);
  warn_closure(load);
  const QuasiOrder& r = load.relation;
  NelsonAlgebra algebra =
      rep_name == "drs" ? drs_algebra(r) : irs_algebra(r);
  json doc;
  doc["report"] = effectiveness_json(r, algebra);
  doc["algebra"] = json::parse(algebra_to_json(algebra));
  std::string rendered = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << rendered;
    return 0;
  }
  write_output(out_path, rendered);
  if (!json_only) {
    const json& rep = doc["report"];
    std::cout << "universe: " << rep["universe"] << "\n"
              << "closed_points: " << rep["closed_points"].dump() << "\n"
              << "effective: " << (rep["effective"].get<bool>() ? "true" : "false")
              << "\n"
              << "semi_simple: "
              << (rep["semi_simple"].get<bool>() ? "true" : "false") << "\n"
              << "carrier: " << rep["carrier_size"] << " elements\n"
              << "written: " << out_path << "\n";
  }
  return 0;
}

// --- check ------------------------------------------------------------------

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

void add_report(std::vector<CheckLine>& lines, const std::string& name,
                const CheckReport& rep) {
  if (rep.ok()) {
    lines.push_back({name, true, ""});
  } else {
    const Violation& v = rep.violations.front();
    lines.push_back({name, false,
                     v.law + ": " + v.detail + " (" +
                         std::to_string(rep.violations.size()) +
                         " violation(s) total)"});
  }
}

void run_guarded(std::vector<CheckLine>& lines, const std::string& name,
                 const std::function<void()>& body) {
  try {
    body();
    lines.push_back({name, true, ""});
  } catch (const std::exception& e) {
    lines.push_back({name, false, e.what()});
  }
}

std::vector<CheckLine> axiom_checks(const NelsonAlgebra& a,
                                    const std::string& tag) {
  std::vector<CheckLine> lines;
  add_report(lines, "kleene_axioms" + tag, verify_kleene_axioms(a));
  add_report(lines, "nelson_axioms" + tag, verify_nelson_axioms(a));
  run_guarded(lines, "involution_conditions" + tag, [&] {
    CheckReport rep = verify_involution_conditions(a);
    if (!rep.ok()) {
      throw std::runtime_error(rep.violations.front().law + ": " +
                               rep.violations.front().detail);
    }
  });
  run_guarded(lines, "negation_reconstruction" + tag, [&] {
    NegationReconstruction rec = negation_from_involution(a);
    if (!rec.ok()) {
      throw std::runtime_error("reconstructed ~ differs at element " +
                               std::to_string(*rec.mismatch));
    }
  });
  return lines;
}

int emit_check_result(const std::vector<CheckLine>& lines,
                      const std::vector<std::pair<std::string, std::string>>& info,
                      bool as_json) {
  bool all_ok = true;
  for (const CheckLine& l : lines) all_ok = all_ok && l.ok;
  if (as_json) {
    json doc;
    doc["checks"] = json::array();
    for (const CheckLine& l : lines) {
      json c;
      c["name"] = l.name;
      c["ok"] = l.ok;
      if (!l.ok) c["detail"] = l.detail;
      doc["checks"].push_back(std::move(c));
    }
    for (const auto& [k, v] : info) doc[k] = v;
    doc["all_ok"] = all_ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const CheckLine& l : lines) {
      if (l.ok) {
        std::cout << "ok   " << l.name << "\n";
      } else {
        std::cout << "FAIL " << l.name << ": " << l.detail << "\n";
      }
    }
    for (const auto& [k, v] : info) std::cout << k << ": " << v << "\n";
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_check_relation(const std::string& relation_path, bool closure,
                       bool as_json) {
  RelationLoad load = load_relation_file(relation_path, closure);
  warn_closure(load);
  const QuasiOrder& r = load.relation;
  std::vector<CheckLine> lines;
  std::vector<std::pair<std::string, std::string>> info;

  NelsonAlgebra irs = irs_algebra(r);
  std::vector<CheckLine> irs_lines = axiom_checks(irs, "_irs");
  lines.insert(lines.end(), irs_lines.begin(), irs_lines.end());

  run_guarded(lines, "irs_characterization",
              [&] { irs_carrier_by_characterization(r); });

  bool have_drs = false;
  NelsonAlgebra drs = irs;  // placeholder until built
  run_guarded(lines, "drs_triple_agreement", [&] {
    drs = drs_algebra(r);
    have_drs = true;
  });
  if (have_drs) {
    std::vector<CheckLine> drs_lines = axiom_checks(drs, "_drs");
    lines.insert(lines.end(), drs_lines.begin(), drs_lines.end());
    run_guarded(lines, "bijection_isomorphism", [&] {
      BijectionReport rep = irs_drs_bijection(irs, drs);
      if (!rep.ok()) throw std::runtime_error(rep.failures.front());
    });
  }

  run_guarded(lines, "join_irreducible_inventory",
              [&] { irs_join_irreducibles(r, irs); });

  SublatticeReport sub = complete_sublattice_check(irs);
  lines.push_back({"complete_sublattice", sub.ok(),
                   sub.ok() ? "" : sub.failures.front()});
  if (!sub.exhaustive) {
    info.emplace_back("sampling_seed", std::to_string(sub.seed));
  }

  bool effective = false;
  run_guarded(lines, "effectiveness_agreement", [&] {
    EffectivenessReport rep = effectiveness_criteria(r);
    effective = rep.effective();
  });
  info.emplace_back("effective", effective ? "true" : "false");
  info.emplace_back("semi_simple", is_semi_simple(irs) ? "true" : "false");

  if (effective) {
    run_guarded(lines, "carrier_formulas", [&] {
      CarrierFormulaReport rep = effective_carrier_check(r);
      if (!rep.ok()) {
        throw std::runtime_error("closed-form carrier mismatch");
      }
    });
    run_guarded(lines, "truth_operator", [&] {
      const SetLattice& h = *drs.provenance().heyting;
      for (int x = 0; x < drs.size(); ++x) {
        int tx = truth_operator(drs, x);
        if (truth_operator(drs, tx) != tx) {
          throw std::runtime_error("T is not idempotent at element " +
                                   std::to_string(x));
        }
        PointSet a = drs.element(x).left, b = drs.element(x).right;
        bool regular =
            pseudocomplement(h, pseudocomplement(h, a)) == a &&
            pseudocomplement(h, pseudocomplement(h, b)) == b;
        if (regular && tx != x) {
          throw std::runtime_error("T moves the regular pair at element " +
                                   std::to_string(x));
        }
        for (int y = 0; y < drs.size(); ++y) {
          if (drs.leq(x, y) && !drs.leq(tx, truth_operator(drs, y))) {
            throw std::runtime_error("T is not monotone at " +
                                     std::to_string(x) + "," +
                                     std::to_string(y));
          }
        }
      }
      if (truth_operator(drs, drs.zero()) != drs.zero() ||
          truth_operator(drs, drs.one()) != drs.one()) {
        throw std::runtime_error("T moves a constant");
      }
      for (const char* text : {"(~p -> 0) -> T(p)", "(p -> 0) -> ~T(p)"}) {
        FormulaPtr f = parse_formula(text);
        ValidityResult v = is_valid(*f, drs);
        if (!v.valid) {
          throw std::runtime_error(std::string("rule schema refuted: ") +
                                   text);
        }
      }
    });
  }

  return emit_check_result(lines, info, as_json);
}

int run_check_algebra(const std::string& algebra_path, bool as_json) {
  NelsonAlgebra a = algebra_from_json_file(algebra_path);
  std::vector<CheckLine> lines = axiom_checks(a, "");
  std::vector<std::pair<std::string, std::string>> info;
  info.emplace_back("semi_simple", is_semi_simple(a) ? "true" : "false");
  return emit_check_result(lines, info, as_json);
}

// --- hasse ------------------------------------------------------------------

int run_hasse(const std::string& relation_path, const std::string& out_path,
              bool closure) {
  RelationLoad load = load_relation_file(relation_path, closure);
  warn_closure(load);
  write_output(out_path, hasse_dot(irs_algebra(load.relation)));
  return 0;
}

// --- validate ---------------------------------------------------------------

int run_validate(const std::string& formula_text, int max_size,
                 bool effective_only, bool as_json, std::uint64_t cap,
                 int jobs, bool exit_zero) {
  FormulaPtr f = parse_formula(formula_text);
  SearchResult res =
      countermodel_search(*f, max_size, effective_only, enumeration_bound(),
                          cap, jobs);
  if (as_json) {
    json doc;
    doc["formula"] = f->to_string();
    doc["max_n"] = res.max_n;
    doc["effective_only"] = res.effective_only;
    if (res.found()) {
      doc["verdict"] = "countermodel";
      doc["relation"] = format_relation(res.countermodel->relation);
      doc["valuation"] =
          valuation_json(res.countermodel->algebra, res.countermodel->valuation);
    } else {
      doc["verdict"] = "none";
    }
    std::cout << doc.dump(2) << "\n";
  } else if (res.found()) {
    const Countermodel& cm = *res.countermodel;
    std::cout << "countermodel found at n=" << cm.relation.size() << "\n"
              << "relation:\n"
              << format_relation(cm.relation) << "valuation:\n"
              << valuation_text(cm.algebra, cm.valuation);
  } else {
    std::cout << "no countermodel up to n=" << res.max_n
              << (res.effective_only ? " (effective models)" : "") << "\n";
  }
  return res.found() && !exit_zero ? 1 : 0;
}

// --- enumerate ---------------------------------------------------------------

const char* kind_label(RelationClass k) {
  switch (k) {
    case RelationClass::All:
      return "quasiorders";
    case RelationClass::PartialOrders:
      return "partial_orders";
    case RelationClass::Equivalences:
      return "equivalences";
    case RelationClass::CofinalClosedPoints:
      return "cofinal_closed_points";
  }
  return "";
}

int run_enumerate(int n, RelationClass kind, bool list, bool stats,
                  bool up_to_iso, bool as_json, int jobs) {
  std::vector<QuasiOrder> rels =
      enumerate_quasiorders(n, kind, enumeration_bound(), up_to_iso);
  int effective_count = 0;
  std::map<int, int> histogram;
  if (stats) {
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(rels.size())));
    std::vector<std::future<std::pair<int, std::map<int, int>>>> futures;
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&rels, w, workers]() {
        std::pair<int, std::map<int, int>> acc{0, {}};
        for (std::size_t i = static_cast<std::size_t>(w); i < rels.size();
             i += static_cast<std::size_t>(workers)) {
          if (effectiveness_criteria(rels[i]).effective()) ++acc.first;
          ++acc.second[irs_algebra(rels[i]).size()];
        }
        return acc;
      }));
    }
    for (auto& fut : futures) {
      auto [eff, hist] = fut.get();
      effective_count += eff;
      for (auto [size, count] : hist) histogram[size] += count;
    }
  }
  if (as_json) {
    json doc;
    doc["n"] = n;
    doc["kind"] = kind_label(kind);
    doc["count"] = rels.size();
    if (stats) {
      doc["effective"] = effective_count;
      json hist = json::array();
      for (auto [size, count] : histogram) {
        hist.push_back(json::array({size, count}));
      }
      doc["carrier_histogram"] = std::move(hist);
    }
    if (list) {
      json items = json::array();
      for (const QuasiOrder& r : rels) items.push_back(format_relation(r));
      doc["relations"] = std::move(items);
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << kind_label(kind) << " on " << n << " points: " << rels.size()
            << "\n";
  if (stats) {
    std::cout << "effective: " << effective_count << "\n";
    std::cout << "carrier sizes:";
    for (auto [size, count] : histogram) {
      std::cout << " " << size << "x" << count;
    }
    std::cout << "\n";
  }
  if (list) {
    for (const QuasiOrder& r : rels) {
      std::cout << "--\n" << format_relation(r);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite rough set algebra workbench"};
  app.require_subcommand(1);

  std::string relation_path, out_path, rep_name = "irs", algebra_path;
  std::string formula_text, kind_name = "all";
  bool closure = false, as_json = false, effective_only = false;
  bool list = false, stats = false, up_to_iso = false, exit_zero = false;
  int max_size = 3, size = 3, jobs = 1;
  std::uint64_t cap = 10'000'000;

  CLI::App* build = app.add_subcommand("build", "construct an algebra from a relation file");
  build->add_option("relation", relation_path, "relation file")->required();
  build->add_option("--rep", rep_name, "representation: irs or drs")
      ->check(CLI::IsMember({"irs", "drs"}));
  build->add_option("--out", out_path, "output JSON path ('-' = stdout)");
  build->add_flag("--closure", closure, "complete a non-transitive input");
  build->add_flag("--json", as_json, "suppress the human report header");

  CLI::App* check = app.add_subcommand("check", "run the verification suite");
  check->add_option("relation", relation_path, "relation file");
  check->add_option("--algebra-json", algebra_path, "check a serialized algebra instead");
  check->add_flag("--closure", closure, "complete a non-transitive input");
  check->add_flag("--json", as_json, "machine-readable report");

  CLI::App* hasse = app.add_subcommand("hasse", "export the covering relation as DOT");
  hasse->add_option("relation", relation_path, "relation file")->required();
  hasse->add_option("--out", out_path, "output path ('-' = stdout)");
  hasse->add_flag("--closure", closure, "complete a non-transitive input");

  CLI::App* validate = app.add_subcommand("validate", "search for a countermodel");
  validate->add_option("formula", formula_text, "formula text")->required();
  validate->add_option("--max-size", max_size, "largest universe to search");
  validate->add_flag("--effective-only", effective_only, "restrict to effective models");
  validate->add_flag("--json", as_json, "machine-readable verdict");
  validate->add_option("--cap", cap, "evaluation cap per (formula, algebra)");
  validate->add_option("--jobs", jobs, "parallel workers");
  validate->add_flag("--exit-zero", exit_zero, "exit 0 even when refuted");

  CLI::App* enumerate = app.add_subcommand("enumerate", "count or list relations");
  enumerate->add_option("--size", size, "number of points");
  enumerate->add_option("--kind", kind_name, "all, posets, equivalences, cofinal")
      ->check(CLI::IsMember({"all", "posets", "equivalences", "cofinal"}));
  enumerate->add_flag("--posets", [&kind_name](std::int64_t) { kind_name = "posets"; },
                      "shorthand for --kind posets");
  enumerate->add_flag("--equivalences",
                      [&kind_name](std::int64_t) { kind_name = "equivalences"; },
                      "shorthand for --kind equivalences");
  enumerate->add_flag("--list", list, "print each relation");
  enumerate->add_flag("--stats", stats, "effectiveness and carrier-size stats");
  enumerate->add_flag("--up-to-iso", up_to_iso, "canonical representatives only");
  enumerate->add_option("--jobs", jobs, "parallel workers for --stats");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      return run_build(relation_path, rep_name, out_path, closure, as_json);
    }
    if (*check) {
      if (!algebra_path.empty() && !relation_path.empty()) {
        std::cerr << "check takes a relation file or --algebra-json, not both\n";
        return 2;
      }
      if (!algebra_path.empty()) return run_check_algebra(algebra_path, as_json);
      if (relation_path.empty()) {
        std::cerr << "check needs a relation file or --algebra-json\n";
        return 2;
      }
      return run_check_relation(relation_path, closure, as_json);
    }
    if (*hasse) return run_hasse(relation_path, out_path, closure);
    if (*validate) {
      return run_validate(formula_text, max_size, effective_only, as_json,
                          cap, jobs, exit_zero);
    }
    if (*enumerate) {
      RelationClass kind = RelationClass::All;
      if (kind_name == "posets") kind = RelationClass::PartialOrders;
      if (kind_name == "equivalences") kind = RelationClass::Equivalences;
      if (kind_name == "cofinal") kind = RelationClass::CofinalClosedPoints;
      return run_enumerate(size, kind, list, stats, up_to_iso, as_json, jobs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
