#pragma once

// Executable checks of the identities and inequalities the library rests on.
// Each suite returns one record per check; a failing check is data, not an
// exception, so a violated inequality is reported with its full parameters.

#include <string>
#include <vector>

#include "pqm/quadrature.hpp"

namespace pqm::verify {

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string point;  // human-readable parameter binding
  double lhs = 0.0;
  double rhs = 0.0;
  // Slack left before the check fails: tolerance minus discrepancy for
  // equalities, (rhs + slack) - lhs for inequalities. Negative means fail.
  double margin = 0.0;
  bool pass = false;
};

using Suite = std::vector<CheckRecord>;

// p = q = 0 reductions of the extended functions and of both Mathieu series.
Suite reductions(const QuadPolicy& policy = {});
// Series path against integral path for F_{p,q} on 50 random points.
Suite two_path(const QuadPolicy& policy = {});
// Direct sums against the Cahen-type integral representations, 12 points x 2.
Suite theorem1(const QuadPolicy& policy = {});
// F_{p,q} as a Laplace transform of Phi_{p,q} on 10 random points.
Suite laplace(const QuadPolicy& policy = {});
// Extended-Beta bound, |F_{p,q}| <= E 2F1(|z|), Luke's bound and both Mathieu bounds.
Suite bounds(const QuadPolicy& policy = {});
// Ten closed-form integrals, including endpoint-singular and semi-infinite ones.
Suite quadrature_golden(const QuadPolicy& policy = {});
// Counting function against brute-force counting, 1000 abscissae per family.
Suite counting(const QuadPolicy& policy = {});
// closed_tail_2f1 against direct quadrature on 10 random points.
Suite closed_tail(const QuadPolicy& policy = {});

// Names accepted by run(), in execution order of "all".
const std::vector<std::string>& suite_names();

// Runs the named suite, or every suite for "all". Throws ParameterError for
// an unknown name.
Suite run(const std::string& name, const QuadPolicy& policy = {});

bool all_pass(const Suite& suite);

}  // namespace pqm::verify
