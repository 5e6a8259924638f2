#pragma once

// Dense tableau simplex for the small LPs used by the transform optimizer:
//   maximize c.x  subject to  A x <= b, x >= 0,  with b >= 0.
// Bland's rule throughout, so degenerate vertices cannot cycle.

#include <vector>

#include "symamp/errors.hpp"

namespace symamp::lp {

struct Result {
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

// Throws SolverFailure on a negative right-hand side, an unbounded ray, or
// iteration blow-up (none of which can occur for well-formed inputs here).
Result maximize(const std::vector<std::vector<double>>& a,
                const std::vector<double>& b, const std::vector<double>& c);

}  // namespace symamp::lp
