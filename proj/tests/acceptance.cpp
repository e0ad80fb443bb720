// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "pqm/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::size_t min_checks;
  double time_limit_s;
};

constexpr Criterion kCriteria[] = {
    {1, "p = q = 0 reductions (rel 1e-9, >= 50 points)", "reductions", 50, 30.0},
    {2, "series vs integral for F_{p,q} (rel 1e-8, 50 points)", "two-path", 50, 60.0},
    {3, "direct sums vs integral representations (rel 1e-6, 12 points x 2)", "theorem1", 24, 300.0},
    {4, "Laplace kernel identity (rel 1e-7, 10 points)", "laplace", 10, 60.0},
    {5, "inequality suite (zero violations)", "bounds", 1, 300.0},
    {6, "quadrature golden suite (5 x err_est, rel 1e-10)", "quadrature-golden", 10, 10.0},
    {7, "counting function exactness (1000 abscissae per family)", "counting", 1, 5.0},
    {8, "closed-form tail vs quadrature (rel 1e-10, 10 points)", "closed-tail", 10, 10.0},
};

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      const pqm::verify::Suite suite = pqm::verify::run(c.suite);
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::size_t failed = 0;
      for (const auto& r : suite) {
        if (r.pass) continue;
        ++failed;
        std::fprintf(stderr, "  finding: %s/%s at %s: lhs=%.17g rhs=%.17g margin=%.3g\n", r.suite.c_str(),
                     r.check.c_str(), r.point.c_str(), r.lhs, r.rhs, r.margin);
      }
      pass = failed == 0 && suite.size() >= c.min_checks && elapsed <= c.time_limit_s;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%zu checks, %zu failed, %.2f s (limit %.0f s)", suite.size(), failed, elapsed,
                    c.time_limit_s);
      detail = buf;
      if (suite.size() < c.min_checks) detail += ", too few checks";
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    std::printf("%s criterion %d: %s [%s] -- %s\n", pass ? "PASS" : "FAIL", c.id, c.title, c.suite, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
