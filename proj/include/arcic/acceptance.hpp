#pragma once

#include "arcic/toric_ic.hpp"

#include <string>
#include <vector>

namespace arcic {

struct NamedMonoid {
  std::string name;
  SaturatedMonoid monoid;
};

/// N, N^2, <(1,0),(1,2)>, <(1,1),(1,-1)> and the saturation of the monoid
/// generated by (3,0), (2,1), (1,2), (0,3).
std::vector<NamedMonoid> desk_corpus();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// One line; counts of checked cases or the first counterexample.
  std::string detail;
  double seconds = 0;
};

CriterionResult criterion_product_formula();
CriterionResult criterion_smooth_normalization();
CriterionResult criterion_global_local();
CriterionResult criterion_stratification();
CriterionResult criterion_cubic_jacobian();
CriterionResult criterion_godement_jacquet();
CriterionResult criterion_satake_machinery();
CriterionResult criterion_field_independence();

/// All eight criteria in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace arcic
