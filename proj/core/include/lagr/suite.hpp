#pragma once

#include "lagr/check.hpp"

#include <string>
#include <vector>

namespace lagr {

// Twelve end-to-end verification batteries covering the whole library.
// Each returns a CheckReport whose items are individually named; a battery
// passes when every item passes. All arithmetic is exact, so every
// comparison below is equality, never a tolerance.
CheckReport criterion_1();   // Lagrangian axiom sweep + random counterexamples
CheckReport criterion_2();   // quotient-bivector <-> graph subspace round trips
CheckReport criterion_3();   // T-map values on standard and Heisenberg points
CheckReport criterion_4();   // bivector certificates (Jacobi, tangency, fixed points)
CheckReport criterion_5();   // normalizer formulas and dimension identities
CheckReport criterion_6();   // component inventory and dimension formula
CheckReport criterion_7();   // model-point criterion, sampled orbit, borel witness
CheckReport criterion_8();   // one-parameter limits between signature points
CheckReport criterion_9();   // complexification dictionary and doubled limits
CheckReport criterion_10();  // torus-twisted bivectors and their Drinfeld images
CheckReport criterion_11();  // 2x2 Hermitian model and the sphere family
CheckReport criterion_12();  // component-group orders of signature stabilizers

struct SuiteResult {
  int number{0};
  std::string title;
  CheckReport report;
};

// Runs all twelve batteries in order.
std::vector<SuiteResult> run_suite();

}  // namespace lagr
