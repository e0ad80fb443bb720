#pragma once

// Mathieu-type a-series built on the (p,q)-extended Gauss function
//
//   F~(r)  = sum_{n>=1}          F_{p,q}(lambda,b;c;-r^2/a_n) / (a_n^lambda (a_n+r^2)^eta)
//   Ft~(r) = sum_{n>=1} (-1)^{n-1} F_{p,q}(lambda,b;c;-r^2/a_n) / (a_n^lambda (a_n+r^2)^eta)
//
// together with their integral representations over the counting function
// [a^{-1}(x)] (Cahen's formula) and the associated upper bounds.
//
// For power sequences a_n = s n^k the sums and the Cahen integrals are split
// into an explicit head and an analytic tail: for x beyond a few multiples of
// r^2 the kernel expands in powers of r^2/x, and every power reduces to a
// Hurwitz zeta value. Other sequences are summed term by term against a
// rigorous majorant of the remainder.

#include <cstddef>
#include <cstdint>

#include "pqm/classical.hpp"
#include "pqm/extended.hpp"
#include "pqm/quadrature.hpp"
#include "pqm/result.hpp"
#include "pqm/sequence.hpp"

namespace pqm {

struct MathieuParams {
  double lambda = 1.0;
  double eta = 1.0;
  double r = 0.5;
  double b = 1.0;
  double c = 2.0;
  PQParams pq;
  SequenceSpec seq = SequenceSpec::power(1.0, 1.0);
  // Cap on summed terms / integrated panels when the sequence has no
  // closed-form tail.
  std::size_t max_terms = 20000;

  // lambda, eta, r > 0, c > b > 0, p, q >= 0 and r^2 <= a_1. Throws DomainError.
  void validate() const;
  // validate() plus lambda in (0,1], r^2 < a_1, b <= 1 and c >= lambda + 1
  // (Luke's window for both shifted kernels).
  void validate_for_bounds() const;
};

// Which hypergeometric kernel the series uses. `classical` replaces F_{p,q}
// by 2F1 regardless of p, q.
enum class KernelKind { extended, classical };

enum class SeriesMethod { direct, theorem1_integral, bound_rhs };

struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the truncated remainder
  double err_est = 0.0;     // tail_bound plus accumulated quadrature error
  std::size_t n_terms = 0;  // explicit terms or panels
  std::size_t n_work = 0;   // integrand evaluations
  SeriesMethod method = SeriesMethod::direct;
  bool converged = false;
};

const char* to_string(SeriesMethod m);

// n-th summand of the non-alternating series (without sign).
double mathieu_term(const MathieuParams& params, std::int64_t n, const QuadPolicy& policy = {},
                    KernelKind kernel = KernelKind::extended);

SeriesResult mathieu_direct(const MathieuParams& params, const QuadPolicy& policy = {},
                            KernelKind kernel = KernelKind::extended);

SeriesResult mathieu_alternating_direct(const MathieuParams& params, const QuadPolicy& policy = {},
                                        KernelKind kernel = KernelKind::extended);

// int_{a_1}^inf F(alpha,b;c;-r^2/x) w(x) / (x^alpha (x+r^2)^beta) dx with
// w = [a^{-1}(x)] or its parity (alternating). Evaluated panel by panel over
// [a_N, a_{N+1}) where the weight is constant.
EvalResult cahen_integral(double alpha, double beta, const MathieuParams& params, bool alternating,
                          const QuadPolicy& policy = {}, KernelKind kernel = KernelKind::extended);

// lambda I(lambda+1, eta) + eta I(lambda, eta+1).
SeriesResult mathieu_via_theorem1(const MathieuParams& params, const QuadPolicy& policy = {},
                                  KernelKind kernel = KernelKind::extended);

SeriesResult mathieu_alt_via_theorem1(const MathieuParams& params, const QuadPolicy& policy = {},
                                      KernelKind kernel = KernelKind::extended);

// U_a(lambda, eta) = int_{a_1}^inf [a^{-1}(x)] / (x^lambda (x+r^2)^eta) dx.
// lambda may be any real; convergence needs lambda + eta > 1 + 1/k for a_n = s n^k.
EvalResult u_integral(const SequenceSpec& seq, double lambda, double eta, double r,
                      const QuadPolicy& policy = {});

// int_{a1}^inf dx / (x^lambda (x+r^2)^eta)
//   = 2F1(eta, lambda+eta-1; lambda+eta; -r^2/a1) / ((lambda+eta-1) a1^{lambda+eta-1}),
// for lambda + eta > 1, eta >= 0, r^2 < a1.
double closed_tail_2f1(double a1, double lambda, double eta, double r, const QuadPolicy& policy = {});

// Upper bound for mathieu_direct assembled from E_{p,q}, U_a(lambda+1,eta),
// U_a(lambda,eta), U_a(lambda,eta+1) and U_a(lambda-1,eta+1).
double bound_mathieu_rhs(const MathieuParams& params, const QuadPolicy& policy = {});

// Upper bound for mathieu_alternating_direct in terms of 2F1 values at -r^2/a_1,
// assembled as stated: its 2F1 factors carry third parameter eta+1 (resp. eta+2)
// where the exact tail integrals have lambda+eta (resp. lambda+eta+1). For
// lambda <= 1 that only enlarges them, so the bound is not weakened.
// Requires lambda + eta > 1 besides validate_for_bounds().
double bound_mathieu_alt_rhs(const MathieuParams& params, const QuadPolicy& policy = {});

}  // namespace pqm
