#pragma once

#include "dihedral/decomposition.hpp"

namespace dihedral {

// Character of the analytic representation, stored as integer coefficients
// over the rational irreducibles; values are integers via Ramanujan sums.
struct AnalyticCharacter {
  int n = 0;
  std::map<RationalIrrepId, int> coefficients;
};

AnalyticCharacter analytic_character(const DecompositionReport& report);
long long analytic_char_value(const AnalyticCharacter& chr, Elem e);

struct ShimuraReport {
  int n = 0;
  ActionLabel label = ActionLabel::Unique;
  long long dimension = 0;    // N from Serre's formula
  long long closed_form = 0;  // (3n-1)/2 for Type1, n otherwise
  bool match = false;
};

// N = (1 / 2|G|) sum_{g in G} (chi(g)^2 + chi(g^2)); throws ConsistencyError
// ("divisibility") if 2|G| does not divide the sum.
long long shimura_dimension(const AnalyticCharacter& chr);

long long closed_form_N(int n, ActionLabel label);

ShimuraReport shimura_report(const DecompositionReport& report);

}  // namespace dihedral
