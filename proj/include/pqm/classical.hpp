#pragma once

// Classical special functions: Gamma, Beta, Pochhammer, Gauss 2F1, Kummer 1F1,
// Luke's rational majorant of 2F1(a,b;c;-z), and the Hurwitz zeta sums used
// to close off Mathieu-type tails.

#include "pqm/quadrature.hpp"
#include "pqm/result.hpp"

namespace pqm {

// Hypergeometric parameters (a, b, c). The extended functions require
// c > b > 0; the classical 2F1 accepts any c that is not a non-positive integer.
struct HyperTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool has_standard_order() const { return c > b && b > 0.0; }
  // Throws DomainError unless c > b > 0.
  void require_standard_order(const char* where) const;
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0.
double beta(double x, double y);

// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
double pochhammer(double a, int n);

// Gauss 2F1(a, b; c; z) for z < 1. Negative arguments go through the Pfaff
// transformation so that the summed series has terms of one sign.
// n_work counts series terms; policy.max_evals caps it.
EvalResult gauss_2f1(const HyperTriple& t, double z, const QuadPolicy& policy = {});

// Kummer 1F1(b; c; z) for c > b > 0. Negative arguments use
// 1F1(b;c;z) = e^z 1F1(c-b;c;-z).
EvalResult kummer_1f1(double b, double c, double z, const QuadPolicy& policy = {});

// Right-hand side of Luke's inequality
//   2F1(a,b;c;-z) < 1 - 2ab(c+1)/(c(a+1)(b+1)) [1 - 2(c+1)/(2(c+1) + (a+1)(b+1) z)]
// valid for b in (0,1], c >= a > 0, z > 0. Throws DomainError outside that window.
double luke_bound_rhs(const HyperTriple& t, double z);

// Hurwitz zeta  sum_{n>=0} (n + a)^{-s}  for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

// Alternating Hurwitz sum  sum_{n>=0} (-1)^n (n + a)^{-s}  for s > 0, a > 0.
double alternating_hurwitz_zeta(double s, double a);

}  // namespace pqm
