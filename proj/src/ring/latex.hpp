#pragma once

#include <string>

#include "ring/poly.hpp"

namespace amen {

std::string var_latex(Var v);
std::string mono_latex(const Mono& m);
std::string rational_latex(const Rational& q);  // "\frac{1}{2}", "-3"
std::string latex_str(const QPoly& f);

}  // namespace amen
