#include "verify/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ring/blocks.hpp"
#include "ring/relations.hpp"
#include "schubert_oracle/oracle.hpp"

namespace amen {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json case_json(const CaseRecord& c) {
  nlohmann::json j;
  j["label"] = c.label;
  if (c.type) j["type"] = std::string(1, type_char(*c.type));
  if (!c.form.empty()) j["form"] = c.form;
  j["equal"] = c.equal;
  j["expected"] = c.expected;
  j["passed"] = c.passed();
  j["mode"] = c.mode;
  if (c.mode == "randomized") {
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["prime"] = c.prime;
  }
  j["elapsed_ms"] = c.elapsed_ms;
  if (c.exact_recheck) j["exact_recheck"] = *c.exact_recheck;
  if (!c.lhs.empty() || !c.rhs.empty()) {
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int max_n(LieType t, bool exact) {
  if (t == LieType::A) return exact ? 6 : 7;
  return exact ? 4 : 5;
}

}  // namespace

std::string clip(const std::string& s, size_t limit) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ... (" + std::to_string(s.size() - limit) + " more characters)";
}

int Report::failed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.passed(); }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["config"] = config;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases) j["cases"].push_back(case_json(c));
  const int n = static_cast<int>(cases.size());
  j["summary"] = {{"cases", n}, {"passed", n - failed()}, {"failed", failed()}, {"ok", ok()}};
  if (suite == "sweep") {
    j["summary"]["amenable"] = amenable;
    j["summary"]["excluded"] = excluded;
  }
  return j;
}

std::vector<SignedWord> amenable_elements(LieType t, int n) {
  std::vector<SignedWord> out;
  for (auto& w : all_elements(t, n))
    if (is_amenable(w)) out.push_back(std::move(w));
  return out;
}

Report sweep(const SweepConfig& cfg) {
  if (cfg.n < 1 || cfg.n > max_n(cfg.type, cfg.exact))
    throw std::invalid_argument("sweep: n = " + std::to_string(cfg.n) + " is outside the budget for type " +
                                type_char(cfg.type) + (cfg.exact ? " in exact mode" : "") + " (max " +
                                std::to_string(max_n(cfg.type, cfg.exact)) + ")");
  const uint64_t prime = cfg.prime ? cfg.prime : kDefaultPrime;
  Report rep;
  rep.suite = "sweep";
  rep.config = {{"type", std::string(1, type_char(cfg.type))},
                {"n", cfg.n},
                {"seed", cfg.seed},
                {"mode", cfg.exact ? "exact" : "randomized"},
                {"sample", cfg.sample},
                {"all_forms", cfg.all_forms}};
  if (!cfg.exact) rep.config["prime"] = prime;

  std::vector<SignedWord> scope;
  if (!cfg.words.empty()) {
    for (const auto& w0 : cfg.words) {
      SignedWord w = pad(w0, std::max(cfg.n, w0.n()));
      if (w.type != cfg.type) throw std::invalid_argument("sweep: word " + w0.pretty() + " has the wrong type");
      if (is_amenable(w)) scope.push_back(w);
      else ++rep.excluded;
    }
    rep.amenable = static_cast<int>(scope.size());
  } else {
    scope = amenable_elements(cfg.type, cfg.n);
    rep.amenable = static_cast<int>(scope.size());
    if (cfg.sample > 0 && cfg.sample < static_cast<int>(scope.size())) {
      std::mt19937_64 rng(cfg.seed);
      std::shuffle(scope.begin(), scope.end(), rng);
      scope.resize(cfg.sample);
      std::sort(scope.begin(), scope.end());
    }
  }

  RelationContext exact_ctx;
  exact_ctx.flavor = flavor_of(cfg.type);

  // Randomized mode: one oracle per independent y draw.
  PrimeScope ps(prime);
  std::vector<std::unique_ptr<FpOracle>> oracles;
  int trials = 0;
  if (!cfg.exact) {
    const int rank = std::max(cfg.n, scope.empty() ? 0 : scope.front().n());
    trials = std::max(2, trials_needed(length(longest_element(cfg.type, rank)), prime));
    for (int t = 0; t < trials; ++t)
      oracles.push_back(std::make_unique<FpOracle>(CMode::PowerSum, draw_y(cfg.seed + 0x9e3779b97f4a7c15ULL * t, rank + 1)));
    rep.config["trials"] = trials;
  }

  for (const auto& w : scope) {
    std::vector<FormulaForm> forms = {FormulaForm::Flagged};
    if (cfg.all_forms) {
      forms.push_back(FormulaForm::Proposition);
      if (is_leading(w)) forms.push_back(FormulaForm::Factorial);
    }
    for (FormulaForm form : forms) {
      CaseRecord c;
      c.label = w.pretty();
      c.type = cfg.type;
      c.form = form_name(form);
      c.mode = cfg.exact ? "exact" : "randomized";
      c.seed = cfg.seed;
      const auto t0 = Clock::now();
      const FormulaPlan plan = plan_formula(w, form);
      if (cfg.exact) {
        QPoly f = evaluate_plan(plan, default_cmode(cfg.type));
        QPoly o = schubert(w);
        c.equal = eq_mod_relations(exact_ctx, f, o);
        if (!c.equal) c.lhs = clip(f.str()), c.rhs = clip(o.str());
      } else {
        c.prime = prime;
        c.trials = trials;
        c.equal = true;
        for (auto& o : oracles) {
          Poly<Fp> f = evaluate_plan_as(plan, o->env_for(cfg.type));
          Poly<Fp> g = o->schubert(w);
          if (!(f == g)) {
            c.equal = false;
            c.lhs = clip(f.str());
            c.rhs = clip(g.str());
            break;
          }
        }
        if (!c.equal && w.n() <= max_n(cfg.type, true)) {
          c.exact_recheck = eq_mod_relations(exact_ctx, evaluate_plan(plan, default_cmode(cfg.type)), schubert(w));
          c.note = "polynomials shown with power-sum c and numeric y";
        }
      }
      c.elapsed_ms = ms_since(t0);
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

Report lemma_report(const LemmaConfig& cfg, const std::vector<std::string>& names) {
  Report rep;
  rep.suite = "lemmas";
  rep.config = {{"seed", cfg.seed}, {"trials", cfg.trials}, {"prime", cfg.prime ? cfg.prime : kDefaultPrime}};
  const auto list = names.empty() ? lemma_names() : names;
  for (const auto& name : list) {
    const auto t0 = Clock::now();
    LemmaOutcome o = run_lemma(name, cfg);
    CaseRecord c;
    c.label = name;
    c.form = o.name;
    c.equal = o.ok();
    c.mode = o.mode == "randomized" ? "randomized" : "exact";
    c.trials = o.points;
    c.seed = cfg.seed;
    c.prime = cfg.prime ? cfg.prime : kDefaultPrime;
    c.elapsed_ms = ms_since(t0);
    c.note = std::to_string(o.passed) + "/" + std::to_string(o.instances) + " instances";
    for (const auto& f : o.failures) c.note += "; failed: " + f;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

namespace {

// c_p of the formal families c(1), c(2) of the deformation example.
QPoly fam_c(int family, int p) {
  if (p < 0) return QPoly();
  if (p == 0) return QPoly::constant(1);
  return QPoly::var(symbol("c_" + std::to_string(p) + "(" + std::to_string(family) + ")", p));
}

void example_one(Report& rep) {
  // rho = (0,1,0), lambda = (2,1,1): rows 2 and 3 share the family c(2),
  // and the deformation touches row 2 only.
  const std::vector<int> family = {1, 2, 2};
  const std::vector<int> lambda = {2, 1, 1};
  const Var b1 = symbol("b_1", 1);
  const auto terms = collect_by_index(expand_RD(PairSet{{1, 2}}, 3, lambda));

  auto row_value = [&](int row, int p, bool deformed) {
    QPoly v = fam_c(family[row], p);
    if (deformed && row == 1) v += QPoly::var(b1) * fam_c(family[row], p - 1);
    return v;
  };
  auto theta = [&](bool deformed) {
    QPoly acc;
    for (const auto& [idx, c] : terms) {
      QPoly prod = QPoly::constant(Rational(static_cast<long>(c)));
      for (int i = 0; i < 3; ++i) prod = prod * row_value(i, idx[i], deformed);
      acc += prod;
    }
    return acc;
  };

  // the uncombined display, term by term
  std::multiset<std::pair<long, std::string>> shown = {
      {1, "c_2(1)c_1(2)c_1(2)"}, {-2, "c_3(1)c_1(2)"}, {1, "c_3(1)c_1(2)"}, {-1, "c_2(1)c_2(2)"}};
  std::multiset<std::pair<long, std::string>> got;
  for (const auto& [idx, c] : terms) {
    std::string m;
    for (int i = 0; i < 3; ++i)
      if (idx[i] > 0) m += "c_" + std::to_string(idx[i]) + "(" + std::to_string(family[i]) + ")";
    got.insert({static_cast<long>(c), m});
  }
  {
    CaseRecord c;
    c.label = "deformation example: collected terms of the undeformed theta polynomial";
    c.mode = "exact";
    c.equal = got == shown;
    for (const auto& [k, m] : got) c.lhs += (c.lhs.empty() ? "" : " ") + std::to_string(k) + "*" + m;
    for (const auto& [k, m] : shown) c.rhs += (c.rhs.empty() ? "" : " ") + std::to_string(k) + "*" + m;
    rep.cases.push_back(std::move(c));
  }

  auto c1 = [&](int fam, int p) { return fam_c(fam, p); };
  const QPoly B1 = QPoly::var(b1);
  const QPoly shown_deformed = c1(1, 2) * (c1(2, 1) + B1) * c1(2, 1) - c1(1, 3) * c1(2, 1) * Rational(2) +
                               c1(1, 3) * (c1(2, 1) + B1) - c1(1, 2) * (c1(2, 2) + B1 * c1(2, 1));
  const QPoly plain = theta(false), deformed = theta(true);
  {
    CaseRecord c;
    c.label = "deformation example: deformed theta polynomial";
    c.mode = "exact";
    c.equal = deformed == shown_deformed;
    if (!c.equal) c.lhs = deformed.str(), c.rhs = shown_deformed.str();
    rep.cases.push_back(std::move(c));
  }
  {
    CaseRecord c;
    c.label = "deformation example: difference equals b_1 c_3(1)";
    c.mode = "exact";
    const QPoly diff = deformed - plain;
    c.equal = diff == B1 * c1(1, 3);
    c.lhs = diff.str();
    c.rhs = (B1 * c1(1, 3)).str();
    rep.cases.push_back(std::move(c));
  }
}

void example_321(Report& rep) {
  PolyEnv<Rational> env(CMode::FreeB);
  Blocks<QPoly> B(env);
  RelationContext ctx;
  ctx.flavor = Flavor::D;
  const QPoly half = QPoly::constant(Rational(1, 2));

  // block expansions as displayed, with c_p = 2 b_p
  auto ex = [&](int r, int i) { return env.ex(r, i); };
  auto hy = [&](int s, int i) { return env.hy(s, i); };
  auto c = [&](int p) { return env.c(p); };
  struct Expansion {
    const char* label;
    QPoly got, shown;
  };
  std::vector<Expansion> expansions = {
      {"321 example: ^2b^1_2", B.b_up(2, 1, false),
       half * (c(2) + c(1) * ex(2, 1)) + ex(2, 2) + (c(1) + ex(2, 1)) * hy(1, 1) + hy(1, 2)},
      {"321 example: ^1c^2_1", B.c(1, 2, 1), c(1) + ex(1, 1) + hy(2, 1)},
      {"321 example: ^2c^1_3", B.c(2, 1, 3),
       c(3) + c(2) * (ex(2, 1) + hy(1, 1)) + c(1) * (ex(2, 2) + ex(2, 1) * hy(1, 1) + hy(1, 2)) +
           (ex(2, 2) * hy(1, 1) + ex(2, 1) * hy(1, 2) + hy(1, 3))},
      {"321 example: ^2b^0_2", B.b_up(2, 0, false), half * (c(2) + c(1) * ex(2, 1)) + ex(2, 2)},
      {"321 example: ^2c^0_3", B.c(2, 0, 3), c(3) + c(2) * ex(2, 1) + c(1) * ex(2, 2)},
  };
  for (auto& e : expansions) {
    CaseRecord rc;
    rc.label = e.label;
    rc.type = LieType::D;
    rc.mode = "exact";
    rc.equal = e.got == e.shown;
    if (!rc.equal) rc.lhs = e.got.str(), rc.rhs = e.shown.str();
    rep.cases.push_back(std::move(rc));
  }

  // (1 - R12) star c_hat with upper (2,1); lower (1,2) for 321, (0,2) for its iota.
  for (const auto& [word, lower] : std::vector<std::pair<std::vector<int>, int>>{{{3, 2, 1}, 1}, {{-3, 2, -1}, 0}}) {
    const SignedWord w(LieType::D, word);
    const QPoly oracle = schubert(w);
    const QPoly shown = B.b_up(2, lower, false) * B.c(1, 2, 1) - half * B.c(2, lower, 3) * B.c(1, 2, 0);
    const ShapeData s = shape(w);
    QPoly defined;
    for (const auto& t : expand_RD(PairSet{}, 2, {2, 1})) {
      QPoly prod = QPoly::constant(Rational(static_cast<long>(t.coeff)));
      for (const auto& key : star_apply(s, t, {2, 1}, {lower, 2})) prod = prod * B.eval(key);
      defined += prod;
    }
    for (const auto& [what, value] : std::vector<std::pair<std::string, QPoly>>{{"displayed value", shown},
                                                                                 {"star definition", defined}}) {
      const auto t0 = Clock::now();
      CaseRecord rc;
      rc.label = "321 example: " + what + " differs from the Schubert polynomial of " + w.pretty();
      rc.type = LieType::D;
      rc.mode = "exact";
      rc.expected = false;
      rc.equal = eq_mod_relations(ctx, value, oracle);
      rc.lhs = clip(value.str());
      rc.rhs = clip(oracle.str());
      rc.note = "type " + std::to_string(s.d_type);
      rc.elapsed_ms = ms_since(t0);
      rep.cases.push_back(std::move(rc));
    }
  }
}

}  // namespace

Report appendix_b() {
  Report rep;
  rep.suite = "appendix-b";
  example_one(rep);
  example_321(rep);
  return rep;
}

}  // namespace amen
