// Command-line frontend for the logic-program semantics library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpsem/compare.hpp"
#include "lpsem/errors.hpp"
#include "lpsem/fuzz.hpp"
#include "lpsem/generate.hpp"
#include "lpsem/interp.hpp"
#include "lpsem/levelmaps.hpp"
#include "lpsem/operators.hpp"
#include "lpsem/stable.hpp"
#include "lpsem/strata.hpp"
#include "lpsem/syntax.hpp"

namespace {

using namespace lpsem;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;  // certification failed / no stable model
constexpr int kExitParse = 2;
constexpr int kExitOverflow = 3;  // grounding overflow or cap exceeded
constexpr int kExitBadInput = 4;  // invalid model/levels file, wrong program kind
constexpr int kExitInternal = 70;

struct Options {
  std::string input_path;  // empty: stdin
  std::string semantics = "wf";
  std::string condition;
  std::string model_path;
  std::string levels_path;
  std::optional<int> depth;
  bool json = false;
  bool trace = false;
  std::size_t cap_stable = kDefaultStableCap;
  std::size_t cap_oracle = kDefaultOracleCap;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  GeneratorParams shape;
};

Program load_program(const Options& opt) {
  if (opt.input_path.empty() || opt.input_path == "-") return parse_program(std::cin);
  std::ifstream in(opt.input_path);
  if (!in) throw Error("cannot open " + opt.input_path);
  return parse_program(in);
}

GroundProgram load_ground(const Options& opt) { return ground(load_program(opt), opt.depth); }

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInterpretation("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInterpretation(path + ": " + e.what());
  }
  return j;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_parse(const Options& opt) {
  Program p = load_program(opt);
  if (opt.json) {
    nlohmann::json j;
    std::vector<std::string> clauses;
    for (const Clause& c : p.clauses) clauses.push_back(c.render());
    std::vector<std::string> declared;
    for (const Atom& a : p.declared_atoms) declared.push_back(a.render());
    j["clauses"] = clauses;
    j["declared"] = declared;
    emit(j);
  } else {
    std::cout << p.render();
  }
  return kExitOk;
}

int cmd_ground(const Options& opt) {
  GroundProgram g = load_ground(opt);
  if (opt.json) {
    emit(program_json(g));
  } else {
    std::cout << g.render();
    std::cout << "% base:";
    for (const std::string& name : g.base_names()) std::cout << " " << name;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_model(const Options& opt) {
  GroundProgram g = load_ground(opt);
  if (opt.semantics == "least") {
    LeastModelResult r = least_model(g);
    Interpretation total = totalize(g.table_size(), r.model, g.base());
    if (opt.json) {
      nlohmann::json j = interpretation_json(total, g);
      if (opt.trace) j["trace"] = trace_json(r.trace, g, "tp_plus");
      emit(j);
    } else {
      if (opt.trace)
        for (std::size_t k = 0; k < r.trace.iterates.size(); ++k)
          std::cout << "step " << k << ": {" << [&] {
            std::string s;
            for (AtomId a : r.trace.iterates[k].true_atoms()) s += (s.empty() ? "" : ", ") + g.atom_name(a);
            return s;
          }() << "}\n";
      std::cout << interpretation_text(total, g) << "\n";
    }
    return kExitOk;
  }
  if (opt.semantics == "fitting" || opt.semantics == "wf") {
    StepOperator op = opt.semantics == "fitting" ? StepOperator::Fitting : StepOperator::WellFounded;
    SemanticsTrace t = least_fixpoint(g, op);
    if (opt.json) {
      nlohmann::json j = interpretation_json(t.fixpoint(), g);
      if (opt.trace) j["trace"] = trace_json(t, g, opt.semantics == "fitting" ? "phi" : "wp");
      emit(j);
    } else {
      if (opt.trace)
        for (std::size_t k = 0; k < t.iterates.size(); ++k)
          std::cout << "step " << k << ":\n" << interpretation_text(t.iterates[k], g) << "\n";
      std::cout << interpretation_text(t.fixpoint(), g) << "\n";
    }
    return kExitOk;
  }
  if (opt.semantics == "ws") {
    WeaklyPerfectResult r = weakly_perfect(g);
    if (opt.json) {
      nlohmann::json j = interpretation_json(r.model, g);
      j["kind"] = r.kind == ModelKind::Total ? "total" : "partial";
      if (opt.trace) j["trace"] = weakly_perfect_json(r, g);
      emit(j);
    } else {
      if (opt.trace) {
        for (std::size_t k = 0; k < r.rounds.size(); ++k) {
          const WeaklyPerfectRound& round = r.rounds[k];
          std::cout << "round " << k + 1 << ": stratum {" << [&] {
            std::string s;
            for (AtomId a : round.stratum) s += (s.empty() ? "" : ", ") + g.atom_name(a);
            return s;
          }() << "}";
          if (round.stop) std::cout << " stop: " << *round.stop;
          std::cout << "\n";
        }
      }
      std::cout << (r.kind == ModelKind::Total ? "total" : "partial") << "\n";
      std::cout << interpretation_text(r.model, g) << "\n";
    }
    return kExitOk;
  }
  throw CLI::ValidationError("--semantics must be least|fitting|wf|ws");
}

int cmd_levels(const Options& opt) {
  GroundProgram g = load_ground(opt);
  auto kind = semantics_from_name(opt.semantics);
  if (!kind) throw CLI::ValidationError("--semantics must be least|fitting|wf|ws|afp|stable");
  std::optional<AtomIdSet> candidate;
  if (*kind == SemanticsKind::StableModel) {
    if (opt.model_path.empty())
      throw CLI::ValidationError("--semantics stable needs --model with the candidate");
    Interpretation i = interpretation_from_json(load_json_file(opt.model_path), g);
    candidate = i.true_atoms();
  }
  CanonicalLevels r = canonical_levels(g, *kind, candidate);
  if (opt.json) {
    nlohmann::json j;
    j["model"] = interpretation_json(r.model, g);
    j["levels"] = level_mapping_json(r.levels, g)["levels"];
    emit(j);
  } else {
    std::cout << interpretation_text(r.model, g) << "\n";
    for (const auto& [atom, level] : r.levels.levels)
      std::cout << "l(" << g.atom_name(atom) << ") = " << level.render() << "\n";
  }
  return kExitOk;
}

int cmd_certify(const Options& opt) {
  GroundProgram g = load_ground(opt);
  auto cond = condition_from_name(opt.condition);
  if (!cond) throw CLI::ValidationError("--condition must be def|stable|f|wf|ws|sfi|locstrat");
  Interpretation i(g.table_size());
  if (!opt.model_path.empty()) i = interpretation_from_json(load_json_file(opt.model_path), g);
  LevelMapping l;
  if (!opt.levels_path.empty()) l = level_mapping_from_json(load_json_file(opt.levels_path), g);
  CertReport report = certify(g, i, l, *cond);
  if (opt.json) {
    emit(cert_report_json(report, g));
  } else {
    if (*cond != Condition::Locstrat)
      std::cout << (report.model ? "model: yes" : "model: NO") << "\n";
    std::cout << (report.ok ? "PASSED" : "FAILED") << "\n";
    for (const Violation& v : report.violations) {
      std::cout << "  " << g.atom_name(v.atom) << " violates (" << v.condition << ")";
      if (!v.clause.empty()) std::cout << " at " << v.clause;
      std::cout << "\n";
    }
  }
  return report.ok ? kExitOk : kExitFailedCheck;
}

int cmd_stable(const Options& opt) {
  GroundProgram g = load_ground(opt);
  std::vector<AtomIdSet> models = stable_models(g, opt.cap_stable);
  if (opt.json) {
    emit(stable_models_json(models, g));
  } else if (models.empty()) {
    std::cout << "no stable models\n";
  } else {
    for (const AtomIdSet& m : models) {
      std::cout << "{";
      for (std::size_t k = 0; k < m.size(); ++k) std::cout << (k ? ", " : "") << g.atom_name(m[k]);
      std::cout << "}\n";
    }
  }
  return models.empty() ? kExitFailedCheck : kExitOk;
}

int cmd_afp(const Options& opt) {
  GroundProgram g = load_ground(opt);
  AfpResult r = alternating_fixpoint(g);
  if (opt.json) {
    emit(afp_json(r, g));
  } else {
    auto show = [&](const char* name, const std::vector<AtomIdSet>& seq) {
      for (std::size_t k = 0; k < seq.size(); ++k) {
        std::cout << name << k << " = {";
        for (std::size_t j = 0; j < seq[k].size(); ++j)
          std::cout << (j ? ", " : "") << g.atom_name(seq[k][j]);
        std::cout << "}\n";
      }
    };
    show("under_", r.under_sequence);
    show("over_", r.over_sequence);
    std::cout << interpretation_text(r.wf_model, g) << "\n";
  }
  return kExitOk;
}

int cmd_compare(const Options& opt) {
  GroundProgram g = load_ground(opt);
  CompareReport r = compare_semantics(g);
  if (opt.json) {
    emit(compare_json(r, g));
  } else {
    std::cout << "fitting:\n" << interpretation_text(r.fitting, g) << "\n";
    std::cout << "weakly perfect:\n" << interpretation_text(r.weakly_perfect, g) << "\n";
    std::cout << "well-founded:\n" << interpretation_text(r.well_founded, g) << "\n";
    std::cout << "containments: fitting<=wp " << (r.fitting_le_wp ? "yes" : "NO") << ", wp<=wf "
              << (r.wp_le_wf ? "yes" : "NO") << "\n";
  }
  if (!r.fitting_le_wp || !r.wp_le_wf) {
    std::cerr << "internal error: containment violated\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_oracle(const Options& opt) {
  GroundProgram g = load_ground(opt);
  auto cond = condition_from_name(opt.condition);
  if (!cond) throw CLI::ValidationError("--condition must be def|stable|f|wf|ws|sfi|locstrat");
  OracleResult r = greatest_certified_model(g, *cond, opt.cap_oracle);
  if (opt.json) {
    nlohmann::json j;
    nlohmann::json maximal = nlohmann::json::array();
    for (const Interpretation& m : r.maximal_models) maximal.push_back(interpretation_json(m, g));
    j["maximal_models"] = std::move(maximal);
    j["greatest"] = r.greatest ? interpretation_json(*r.greatest, g) : nlohmann::json();
    emit(j);
  } else {
    std::cout << r.maximal_models.size() << " maximal certified model(s)\n";
    for (const Interpretation& m : r.maximal_models) std::cout << interpretation_text(m, g) << "\n";
    if (r.greatest)
      std::cout << "greatest:\n" << interpretation_text(*r.greatest, g) << "\n";
    else
      std::cout << "greatest: none\n";
  }
  return kExitOk;
}

int cmd_fuzz(const Options& opt) {
  FuzzReport r = run_fuzz(opt.count, opt.seed, opt.shape);
  if (r.failure) {
    std::cout << "FAIL after " << r.checked << " program(s): " << *r.failure << "\n";
    std::cout << "counterexample:\n" << r.counterexample;
    return kExitInternal;
  }
  std::cout << "ok: " << r.checked << " program(s) checked\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point semantics of normal logic programs, with level-mapping certification"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input)
      sub->add_option("input", opt.input_path, "program file (default: stdin)");
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--depth", opt.depth, "term depth bound for grounding");
    sub->callback([&, sub] { command = sub->get_name(); });
    return sub;
  };

  add_common(app.add_subcommand("parse", "parse and echo the program"));
  add_common(app.add_subcommand("ground", "ground and print clauses plus base"));

  CLI::App* model = add_common(app.add_subcommand("model", "compute a model"));
  model->add_option("--semantics", opt.semantics, "least|fitting|wf|ws (default wf)");
  model->add_flag("--trace", opt.trace, "include operator iterates");

  CLI::App* levels = add_common(app.add_subcommand("levels", "canonical level mapping"));
  levels->add_option("--semantics", opt.semantics, "least|fitting|wf|ws|afp|stable");
  levels->add_option("--model", opt.model_path, "candidate model file (stable only)");

  CLI::App* certify = add_common(app.add_subcommand("certify", "check a (model, levels) pair"));
  certify->add_option("--condition", opt.condition, "def|stable|f|wf|ws|sfi|locstrat")->required();
  certify->add_option("--model", opt.model_path, "interpretation JSON file");
  certify->add_option("--levels", opt.levels_path, "level mapping JSON file");

  CLI::App* stable = add_common(app.add_subcommand("stable", "enumerate stable models"));
  stable->add_option("--cap", opt.cap_stable, "base-size cap for enumeration");

  add_common(app.add_subcommand("afp", "alternating fixpoint sequences"));
  add_common(app.add_subcommand("compare", "fitting vs weakly perfect vs well-founded"));

  CLI::App* oracle = add_common(app.add_subcommand("oracle", "brute-force greatest certified model"));
  oracle->add_option("--condition", opt.condition, "def|stable|f|wf|ws|sfi|locstrat")->required();
  oracle->add_option("--cap", opt.cap_oracle, "base-size cap");

  CLI::App* fuzz = app.add_subcommand("fuzz", "invariant suite over random programs");
  fuzz->add_option("--n", opt.count, "number of programs");
  fuzz->add_option("--seed", opt.seed, "base seed");
  fuzz->add_option("--atoms", opt.shape.num_atoms, "atoms per program");
  fuzz->add_option("--clauses", opt.shape.num_clauses, "clauses per program");
  fuzz->add_option("--max-body", opt.shape.max_body, "max body length");
  fuzz->add_option("--neg-prob", opt.shape.neg_prob, "negation probability");
  fuzz->callback([&] { command = "fuzz"; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (command == "parse") return cmd_parse(opt);
    if (command == "ground") return cmd_ground(opt);
    if (command == "model") return cmd_model(opt);
    if (command == "levels") return cmd_levels(opt);
    if (command == "certify") return cmd_certify(opt);
    if (command == "stable") return cmd_stable(opt);
    if (command == "afp") return cmd_afp(opt);
    if (command == "compare") return cmd_compare(opt);
    if (command == "oracle") return cmd_oracle(opt);
    if (command == "fuzz") return cmd_fuzz(opt);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const GroundingOverflow& e) {
    std::cerr << e.what() << "\n";
    return kExitOverflow;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitOverflow;
  } catch (const InvalidInterpretation& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const DomainMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const NotStable& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const NotDefinite& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
