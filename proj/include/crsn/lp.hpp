#pragma once

#include <stdexcept>
#include <vector>

namespace crsn {

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0;
};

// Minimize c.x subject to A x <= b, x >= 0, with b >= 0 so that the slack
// basis is feasible. Dense tableau simplex with Bland's rule; sized for the
// small allocation LPs this project produces (tens of variables at most).
LpSolution solve_lp_min(const std::vector<double>& c,
                        const std::vector<std::vector<double>>& a,
                        const std::vector<double>& b);

}  // namespace crsn
