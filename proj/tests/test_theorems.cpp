#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagged_formulas/formulas.hpp"
#include "ring/relations.hpp"
#include "schubert_oracle/oracle.hpp"

using namespace amen;

namespace {
bool same(LieType t, const QPoly& f, const QPoly& g) {
  RelationContext ctx;
  ctx.flavor = flavor_of(t);
  return eq_mod_relations(ctx, f, g);
}
}  // namespace

TEST_CASE("flagged formulas equal the oracle in small rank") {
  for (auto [t, n] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 4}, {LieType::C, 2}, {LieType::C, 3}, {LieType::B, 3}, {LieType::D, 2}, {LieType::D, 3}}) {
    int count = 0;
    for (const auto& w : all_elements(t, n)) {
      if (!is_amenable(w)) continue;
      ++count;
      for (FormulaForm form : {FormulaForm::Flagged, FormulaForm::Proposition}) {
        QPoly f = apply_formula(w, form);
        CHECK_MESSAGE(same(t, f, schubert(w)), std::string(1, type_char(t)) << " " << w.pretty() << " " << form_name(form) << " "
                                                            << plan_formula(w, form).describe());
      }
      if (is_leading(w))
        CHECK_MESSAGE(same(t, apply_formula(w, FormulaForm::Factorial), schubert(w)), w.pretty() << " factorial");
    }
    MESSAGE(std::string(1, type_char(t)) << n << " amenable " << count);
  }
}
