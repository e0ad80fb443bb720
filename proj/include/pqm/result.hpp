#pragma once

#include <cstddef>

namespace pqm {

// Value of a special function together with the work spent producing it.
struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;     // absolute error estimate
  std::size_t n_work = 0;   // integrand evaluations, or series terms when no quadrature is involved
  bool converged = false;
  // Set when an extended-Beta argument lies outside x, y > 0 (the integral
  // still converges thanks to the exponential damping).
  bool outside_classical_domain = false;
};

}  // namespace pqm
