// Command-line front end: oracle polynomials, formulas, classification,
// locus formulas and the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "flagged_formulas/formulas.hpp"
#include "locus_emitter/locus.hpp"
#include "ring/latex.hpp"
#include "ring/relations.hpp"
#include "schubert_oracle/oracle.hpp"
#include "verify/report.hpp"
#include "vexillary/vexillary.hpp"
#include "weyl_core/weyl.hpp"

using namespace amen;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string type = "A";
  int n = 0;
  std::string word;
  uint64_t seed = 1;
  uint64_t prime = 0;
  bool exact = false;
  std::string json_path;
};

void add_common(CLI::App* app, Common& c, bool need_word) {
  app->add_option("--type", c.type, "Lie type")->check(CLI::IsMember({"A", "B", "C", "D"}));
  app->add_option("--n", c.n, "rank (words are padded to it)");
  auto* w = app->add_option("--word", c.word, "one-line notation, comma separated, negatives for bars");
  if (need_word) w->required();
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--prime", c.prime, "prime for randomized checks (default 2^61-1)");
  app->add_flag("--exact", c.exact, "symbolic comparison over Q");
  app->add_option("--json", c.json_path, "write a JSON record here");
}

SignedWord word_of(const Common& c) {
  SignedWord w = parse_word(parse_type(c.type), c.word);
  return c.n > w.n() ? pad(w, c.n) : w;
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool same_as_oracle(const SignedWord& w, const FormulaPlan& plan, const Common& c, int& trials) {
  RelationContext ctx;
  ctx.flavor = flavor_of(w.type);
  if (c.exact) {
    trials = 0;
    return eq_mod_relations(ctx, evaluate_plan(plan, default_cmode(w.type)), schubert(w));
  }
  const uint64_t p = c.prime ? c.prime : kDefaultPrime;
  PrimeScope ps(p);
  trials = std::max(2, trials_needed(length(longest_element(w.type, w.n())), p));
  for (int t = 0; t < trials; ++t) {
    FpOracle o(CMode::PowerSum, draw_y(c.seed + 0x9e3779b97f4a7c15ULL * t, w.n() + 1));
    if (!(evaluate_plan_as(plan, o.env_for(w.type)) == o.schubert(w))) return false;
  }
  return true;
}

int print_report(const Report& rep, const std::string& json_path) {
  for (const auto& c : rep.cases) {
    std::cout << (c.passed() ? "ok   " : "FAIL ") << c.label;
    if (!c.form.empty()) std::cout << "  [" << c.form << "]";
    if (!c.expected) std::cout << "  (expected unequal)";
    if (c.exact_recheck) std::cout << "  exact recheck: " << (*c.exact_recheck ? "equal" : "unequal");
    if (!c.note.empty() && rep.suite == "lemmas") std::cout << "  " << c.note;
    std::cout << "\n";
  }
  const int n = static_cast<int>(rep.cases.size());
  std::cout << rep.suite << ": " << n - rep.failed() << "/" << n << " passed";
  if (rep.suite == "sweep") {
    std::cout << ", " << rep.amenable << " amenable in scope";
    if (rep.excluded) std::cout << ", " << rep.excluded << " excluded as not amenable";
  }
  std::cout << "\n";
  write_json(json_path, rep.to_json());
  return rep.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Schubert polynomials and flagged formulas for amenable elements"};
  app.require_subcommand(1);

  Common sc;
  bool sc_latex = false, sc_plain = false;
  auto* schub = app.add_subcommand("schubert", "oracle polynomial by divided differences");
  add_common(schub, sc, true);
  auto* sc_fmt = schub->add_option_group("format");
  sc_fmt->add_flag("--latex", sc_latex);
  sc_fmt->add_flag("--plain", sc_plain);
  sc_fmt->require_option(0, 1);

  Common fc;
  bool f_abstract = false, f_poly = false, f_latex = false, f_check = false;
  std::string f_form = "flagged";
  auto* form = app.add_subcommand("formula", "flagged formula of an amenable element");
  add_common(form, fc, true);
  form->add_option("--form", f_form, "flagged, proposition or factorial")
      ->check(CLI::IsMember({"flagged", "proposition", "factorial"}));
  auto* f_what = form->add_option_group("output");
  f_what->add_flag("--abstract", f_abstract, "in the abstract c[k,p], b[k], bt[k], t[i]");
  f_what->add_flag("--poly", f_poly, "expanded in x, y and c (default)");
  f_what->require_option(0, 1);
  form->add_flag("--latex", f_latex);
  form->add_flag("--check", f_check, "compare with the oracle; exit 1 on mismatch");

  Common ac;
  auto* amen_cmd = app.add_subcommand("amenable", "amenability of a word, or the amenable elements of rank n");
  add_common(amen_cmd, ac, false);

  Common vc;
  auto* vex = app.add_subcommand("vexillary", "vexillary data of a permutation, or a check over S_n");
  add_common(vex, vc, false);

  Common lc;
  std::string l_format = "plain";
  auto* loc = app.add_subcommand("locus", "Chern class formula of the degeneracy locus");
  add_common(loc, lc, true);
  loc->add_option("--format", l_format)->check(CLI::IsMember({"plain", "latex"}));

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  Common sw;
  int sw_sample = 0;
  bool sw_all_forms = false;
  std::vector<std::string> sw_words;
  auto* vsweep = verify->add_subcommand("sweep", "flagged formulas against the oracle");
  vsweep->add_option("--type", sw.type)->check(CLI::IsMember({"A", "B", "C", "D"}))->required();
  vsweep->add_option("--n", sw.n)->required();
  vsweep->add_option("--word", sw_words, "explicit scope (repeatable)");
  vsweep->add_option("--sample", sw_sample, "random subset of this size");
  vsweep->add_option("--seed", sw.seed);
  vsweep->add_option("--prime", sw.prime);
  vsweep->add_flag("--exact", sw.exact);
  vsweep->add_flag("--all-forms", sw_all_forms, "also the proposition and factorial forms");
  vsweep->add_option("--json", sw.json_path);

  LemmaConfig lcfg;
  std::vector<std::string> l_only;
  std::string l_json;
  bool l_list = false;
  auto* vlem = verify->add_subcommand("lemmas", "operator identities and relations");
  vlem->add_option("--seed", lcfg.seed);
  vlem->add_option("--trials", lcfg.trials)->check(CLI::PositiveNumber);
  vlem->add_option("--prime", lcfg.prime);
  vlem->add_option("--only", l_only, "run only these checks (repeatable)");
  vlem->add_flag("--list", l_list, "list the check names");
  vlem->add_option("--json", l_json);

  std::string b_json;
  auto* vapp = verify->add_subcommand("appendix-b", "counterexample reproductions");
  vapp->add_option("--json", b_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (schub->parsed()) {
      SignedWord w = word_of(sc);
      QPoly f = schubert(w);
      std::cout << (sc_latex ? latex_str(f) : f.str()) << "\n";
      write_json(sc.json_path, {{"schema", kReportSchema},
                                {"verb", "schubert"},
                                {"type", sc.type},
                                {"word", w.str()},
                                {"polynomial", f.str()},
                                {"latex", latex_str(f)}});
      return 0;
    }

    if (form->parsed()) {
      SignedWord w = word_of(fc);
      const FormulaForm ff = parse_form(f_form);
      const FormulaPlan plan = plan_formula(w, ff);
      QPoly f;
      if (f_abstract) {
        if (w.type == LieType::A) throw std::invalid_argument("--abstract needs type B, C or D");
        f = theta_eta_abstract(w, true, ff);
      } else {
        f = evaluate_plan(plan, default_cmode(w.type));
      }
      std::cout << plan.describe() << "\n" << (f_latex ? latex_str(f) : f.str()) << "\n";
      json j = {{"schema", kReportSchema},
                {"verb", "formula"},
                {"type", fc.type},
                {"word", w.str()},
                {"form", f_form},
                {"plan", plan.describe()},
                {"abstract", f_abstract},
                {"polynomial", f.str()}};
      int rc = 0;
      if (f_check) {
        int trials = 0;
        const bool eq = same_as_oracle(w, plan, fc, trials);
        std::cout << (eq ? "equal to the oracle" : "DIFFERS from the oracle") << " ("
                  << (fc.exact ? "exact" : "randomized, " + std::to_string(trials) + " trials") << ")\n";
        j["check"] = {{"equal", eq}, {"mode", fc.exact ? "exact" : "randomized"}, {"trials", trials}, {"seed", fc.seed}};
        rc = eq ? 0 : kExitMismatch;
      }
      write_json(fc.json_path, j);
      return rc;
    }

    if (amen_cmd->parsed()) {
      if (ac.word.empty()) {
        if (ac.n < 1) throw std::invalid_argument("give --word or --n");
        auto list = amenable_elements(parse_type(ac.type), ac.n);
        json words = json::array();
        for (const auto& w : list) {
          std::cout << w.pretty() << "\n";
          words.push_back(w.str());
        }
        std::cout << list.size() << " amenable elements\n";
        write_json(ac.json_path, {{"schema", kReportSchema}, {"verb", "amenable"}, {"type", ac.type}, {"n", ac.n},
                                  {"count", list.size()}, {"elements", words}});
        return 0;
      }
      SignedWord w = word_of(ac);
      auto mod = amenable_decompose(w);
      std::cout << w.pretty() << (mod ? " is amenable" : " is not amenable") << "\n";
      json j = {{"schema", kReportSchema}, {"verb", "amenable"}, {"type", ac.type}, {"word", w.str()},
                {"amenable", mod.has_value()}};
      if (mod) {
        std::cout << "base " << mod->base.pretty() << ", omega " << mod->omega.pretty() << " = "
                  << word_to_string(mod->reduced_word) << ", k = " << mod->k << "\n";
        const ShapeData s = shape(w);
        std::cout << "lambda " << vec_str(s.lambda) << ", mu " << vec_str(s.mu) << ", nu " << vec_str(s.nu) << "\n";
        j["base"] = mod->base.str();
        j["omega"] = mod->omega.str();
        j["k"] = mod->k;
        j["lambda"] = s.lambda;
      }
      write_json(ac.json_path, j);
      return 0;
    }

    if (vex->parsed()) {
      if (vc.word.empty()) {
        // vexillary (pattern and code tests) against amenable, over S_n
        if (vc.n < 1) throw std::invalid_argument("give --word or --n");
        int total = 0, agree = 0;
        for (const auto& w : all_elements(LieType::A, vc.n)) {
          ++total;
          const bool v = is_vexillary(w);
          agree += v == is_amenable(w) && v == vexillary_test(a_code(w));
        }
        std::cout << "S_" << vc.n << ": vexillary iff amenable on " << agree << "/" << total << "\n";
        write_json(vc.json_path, {{"schema", kReportSchema}, {"verb", "vexillary"}, {"n", vc.n}, {"elements", total},
                                  {"agree", agree}});
        return agree == total ? 0 : kExitMismatch;
      }
      SignedWord w = parse_word(LieType::A, vc.word);
      if (vc.n > w.n()) w = pad(w, vc.n);
      const bool v = is_vexillary(w);
      std::cout << w.pretty() << (v ? " is vexillary" : " is not vexillary") << "\n";
      json j = {{"schema", kReportSchema}, {"verb", "vexillary"}, {"word", w.str()}, {"vexillary", v}};
      if (v) {
        CanonicalOmega om = canonical_omega(w);
        TableauT tab = tableau_T(w);
        std::cout << "code " << vec_str(a_code(w)) << "\nomega " << om.omega.pretty() << " = "
                  << word_to_string(om.word) << "\ndominant product " << om.product.pretty() << "\ntableau T\n";
        for (const auto& row : tab.rows) std::cout << "  " << vec_str(row) << "\n";
        j["omega"] = om.omega.str();
        j["omega_word"] = om.word;
        j["tableau"] = tab.rows;
      }
      write_json(vc.json_path, j);
      return 0;
    }

    if (loc->parsed()) {
      SignedWord w = parse_word(parse_type(lc.type), lc.word);
      const int n = lc.n ? lc.n : w.n();
      const std::string out = emit(w, n, parse_locus_format(l_format));
      std::cout << out;
      if (!out.empty() && out.back() != '\n') std::cout << "\n";
      write_json(lc.json_path, {{"schema", kReportSchema}, {"verb", "locus"}, {"type", lc.type}, {"word", w.str()},
                                {"n", n}, {"format", l_format}, {"text", out}});
      return 0;
    }

    if (vsweep->parsed()) {
      SweepConfig cfg;
      cfg.type = parse_type(sw.type);
      cfg.n = sw.n;
      cfg.seed = sw.seed;
      cfg.prime = sw.prime;
      cfg.exact = sw.exact;
      cfg.sample = sw_sample;
      cfg.all_forms = sw_all_forms;
      for (const auto& s : sw_words) cfg.words.push_back(parse_word(cfg.type, s));
      return print_report(sweep(cfg), sw.json_path);
    }

    if (vlem->parsed()) {
      if (l_list) {
        for (const auto& n : lemma_names()) std::cout << n << "\n";
        return 0;
      }
      return print_report(lemma_report(lcfg, l_only), l_json);
    }

    if (vapp->parsed()) return print_report(appendix_b(), b_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
