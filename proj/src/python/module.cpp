// Python bindings. Elements cross the boundary as (type letter, entries);
// polynomials as strings, reports as JSON text decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagged_formulas/formulas.hpp"
#include "locus_emitter/locus.hpp"
#include "ring/latex.hpp"
#include "schubert_oracle/oracle.hpp"
#include "verify/report.hpp"
#include "vexillary/vexillary.hpp"
#include "weyl_core/weyl.hpp"

namespace py = pybind11;
using namespace amen;

namespace {

SignedWord make(const std::string& type, const std::vector<int>& w) {
  SignedWord s(parse_type(type), w);
  validate(s);
  return s;
}

py::dict shape_dict(const SignedWord& w) {
  ShapeData s = shape(w);
  py::dict d;
  d["gamma"] = s.gamma;
  d["mu"] = s.mu;
  d["nu"] = s.nu;
  d["lambda"] = s.lambda;
  d["k"] = s.k;
  d["type"] = s.d_type;
  d["xi"] = s.xi;
  d["beta"] = s.beta;
  d["denominators"] = s.denom_set;
  d["f"] = s.f_flag;
  d["g"] = s.g_flag;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schubert polynomials of amenable Weyl group elements";

  m.def("parse_word", [](const std::string& t, const std::string& csv) { return parse_word(parse_type(t), csv).w; });
  m.def("length", [](const std::string& t, const std::vector<int>& w) { return length(make(t, w)); });
  m.def("a_code", [](const std::string& t, const std::vector<int>& w) { return a_code(make(t, w)); });
  m.def("shape", [](const std::string& t, const std::vector<int>& w) { return shape_dict(make(t, w)); });
  m.def("is_amenable", [](const std::string& t, const std::vector<int>& w) { return is_amenable(make(t, w)); });
  m.def("is_vexillary", [](const std::vector<int>& w) { return is_vexillary(make("A", w)); });
  m.def("classify", [](const std::string& t, const std::vector<int>& w) {
    Classification c = classify(make(t, w));
    py::dict d;
    d["dominant"] = c.dominant;
    d["vexillary"] = c.vexillary;
    d["grassmannian"] = c.grassmannian;
    d["leading"] = c.leading;
    d["proper"] = c.proper;
    d["valid"] = c.valid;
    return d;
  });
  m.def("amenable_elements", [](const std::string& t, int n) {
    std::vector<std::vector<int>> out;
    for (const auto& w : amenable_elements(parse_type(t), n)) out.push_back(w.w);
    return out;
  });

  m.def(
      "schubert",
      [](const std::string& t, const std::vector<int>& w, bool latex) {
        QPoly f = schubert(make(t, w));
        return latex ? latex_str(f) : f.str();
      },
      py::arg("type"), py::arg("word"), py::arg("latex") = false);
  m.def(
      "formula",
      [](const std::string& t, const std::vector<int>& w, const std::string& form) {
        return plan_formula(make(t, w), parse_form(form)).describe();
      },
      py::arg("type"), py::arg("word"), py::arg("form") = "flagged");
  m.def(
      "check_formula",
      [](const std::string& t, const std::vector<int>& w, bool exact, uint64_t seed) {
        SweepConfig cfg;
        cfg.type = parse_type(t);
        cfg.n = static_cast<int>(w.size());
        cfg.words = {make(t, w)};
        cfg.exact = exact;
        cfg.seed = seed;
        cfg.all_forms = true;
        py::gil_scoped_release release;
        return sweep(cfg).ok();
      },
      py::arg("type"), py::arg("word"), py::arg("exact") = false, py::arg("seed") = 1);

  m.def("canonical_omega", [](const std::vector<int>& w) {
    CanonicalOmega c = canonical_omega(make("A", w));
    py::dict d;
    d["word"] = c.word;
    d["blocks"] = c.R;
    d["omega"] = c.omega.w;
    d["product"] = c.product.w;
    return d;
  });
  m.def("tableau", [](const std::vector<int>& w) {
    TableauT t = tableau_T(make("A", w));
    py::dict d;
    d["gamma_hat"] = t.gamma_hat;
    d["lambda"] = t.lambda;
    d["lambda_hat"] = t.lambda_hat;
    d["rows"] = t.rows;
    d["omega_word"] = t.omega_word;
    return d;
  });

  m.def(
      "locus",
      [](const std::string& t, const std::vector<int>& w, int n, const std::string& fmt) {
        return emit(make(t, w), n > 0 ? n : static_cast<int>(w.size()), parse_locus_format(fmt));
      },
      py::arg("type"), py::arg("word"), py::arg("n") = 0, py::arg("format") = "plain");

  m.def(
      "sweep_json",
      [](const std::string& t, int n, bool exact, uint64_t seed, int sample, bool all_forms) {
        SweepConfig cfg;
        cfg.type = parse_type(t);
        cfg.n = n;
        cfg.exact = exact;
        cfg.seed = seed;
        cfg.sample = sample;
        cfg.all_forms = all_forms;
        py::gil_scoped_release release;
        return sweep(cfg).to_json().dump();
      },
      py::arg("type"), py::arg("n"), py::arg("exact") = false, py::arg("seed") = 1, py::arg("sample") = 0,
      py::arg("all_forms") = false);
  m.def(
      "lemmas_json",
      [](int trials, uint64_t seed, const std::vector<std::string>& only) {
        LemmaConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        py::gil_scoped_release release;
        return lemma_report(cfg, only).to_json().dump();
      },
      py::arg("trials") = 100, py::arg("seed") = 1, py::arg("only") = std::vector<std::string>{});
  m.def("lemma_names", &lemma_names);
  m.def("appendix_b_json", [] { return appendix_b().to_json().dump(); });
}
