#pragma once

// Built-in algebras, modules and complexes.

#include "qs/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qs::fixtures {

AlgebraPtr F2();  // the field F_2
AlgebraPtr D2();  // F_2[x]/(x^2), basis (1, x)
AlgebraPtr T2();  // upper triangular 2x2 over F_2, basis (e11, e12, e22)

Module k();   // simple D2-module
Module A();   // regular D2-module
Module S1();  // simple T2-module at e11 (projective)
Module S2();  // simple T2-module at e22

/// ... -> A -x-> A -x-> A -> ... over D2.
Complex t_per();
/// 0 -> A -id-> A -> 0 over D2, in degrees 1 and 0.
Complex contractible();

/// Multiplication by x on every term of T_per.
ChainMap x_times_identity();

std::optional<AlgebraPtr> algebra_by_name(const std::string& name);
/// "k", "A", "S1", "S2", also "A_T2", "A_F2".
std::optional<Module> module_by_name(const std::string& name);
/// "T_per", "T_per[k]" for an integer shift k, "contractible".
std::optional<Complex> complex_by_name(const std::string& name);

std::vector<std::string> algebra_names();
std::vector<std::string> module_names();
std::vector<std::string> complex_names();

}  // namespace qs::fixtures
