#pragma once

// Hypergeometric kernel shared by the Mathieu sums and Cahen integrals:
// F(alpha, b; c; z) evaluated pointwise, plus the coefficients of its
// expansion in powers of z used for analytic tails.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "pqm/extended.hpp"
#include "pqm/mathieu.hpp"
#include "pqm/quadrature.hpp"
#include "pqm/result.hpp"

namespace pqm::detail {

class Kernel {
 public:
  enum class Kind { extended, classical, unit };

  Kernel(Kind kind, double b, double c, const PQParams& pq, const QuadPolicy& policy);

  static Kernel for_series(KernelKind kind, const MathieuParams& params, const QuadPolicy& policy);
  static Kernel unit(const QuadPolicy& policy);

  // F(alpha, b; c; z) for z in (-1, 0]; identically 1 for the unit kernel.
  EvalResult value(double alpha, double z) const;

  // sup of F(alpha, b; c; -w) over w >= 0: E_{p,q} for the extended kernel
  // (the Euler integrand is damped by at most E_{p,q} and (1+wt)^{-alpha} <= 1).
  double sup_bound() const;

  // e_j with F(alpha, b; c; z) = sum_j e_j z^j.
  double coefficient(double alpha, std::size_t j) const;

  std::size_t work() const { return work_; }
  bool converged() const { return converged_; }

 private:
  double beta_ratio(std::size_t j) const;

  Kind kind_;
  double b_;
  double c_;
  PQParams pq_;
  QuadPolicy policy_;
  mutable std::vector<double> ratios_;  // B(b+j, c-b; p,q) / B(b, c-b)
  mutable std::size_t work_ = 0;
  mutable bool converged_ = true;
};

struct TailSum {
  double value = 0.0;
  double err = 0.0;
  std::size_t orders = 0;
  bool converged = false;
};

// sum_{m>=0} (-1)^m D_m moment(m) with
//   D_m = sum_{j<=m} e_j(alpha) (beta)_{m-j} / (m-j)!,
// the expansion of F(alpha,b;c;-w) (1+w)^{-beta} in w = r^2/x. `moment(m)`
// must return the tail functional applied to r^{2m} x^{-(alpha+beta+m)}.
template <class Moment>
TailSum expand_tail(const Kernel& kernel, double alpha, double beta, Moment&& moment) {
  constexpr std::size_t kMaxOrder = 400;
  constexpr double kNegligible = 1e-18;
  TailSum out;
  std::vector<double> e;         // e_j(alpha)
  std::vector<double> binomial;  // (beta)_i / i!
  double abs_sum = 0.0;
  double last = 0.0;
  int small = 0;
  for (std::size_t m = 0; m < kMaxOrder; ++m) {
    e.push_back(kernel.coefficient(alpha, m));
    binomial.push_back(m == 0 ? 1.0 : binomial.back() * (beta + static_cast<double>(m) - 1.0) /
                                          static_cast<double>(m));
    double d = 0.0;
    for (std::size_t j = 0; j <= m; ++j) d += e[j] * binomial[m - j];
    const double mom = moment(m);
    const double term = (m % 2 == 0 ? d : -d) * mom;
    out.value += term;
    abs_sum += std::fabs(term);
    out.orders = m + 1;
    if (term != 0.0) last = term;
    small = std::fabs(term) <= kNegligible * std::fabs(out.value) ? small + 1 : 0;
    if (small >= 2 || (mom == 0.0 && m > 0)) {
      out.converged = true;
      break;
    }
  }
  out.err = 2.0 * std::fabs(last) + roundoff_floor(abs_sum);
  return out;
}

}  // namespace pqm::detail
