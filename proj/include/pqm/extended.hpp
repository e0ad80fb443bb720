#pragma once

// (p,q)-extended Beta, Gauss and Kummer functions.
//
//   B(x,y;p,q)         = int_0^1 t^{x-1} (1-t)^{y-1} exp(-p/t - q/(1-t)) dt
//   F_{p,q}(a,b;c;z)   = sum_n (a)_n B(b+n, c-b; p,q) / B(b, c-b) z^n / n!
//   Phi_{p,q}(b;c;z)   = sum_n       B(b+n, c-b; p,q) / B(b, c-b) z^n / n!
//
// F_{p,q} and Phi_{p,q} are available both as a single Euler-type integral and
// as the defining series (one extended-Beta quadrature per coefficient); the
// two routes serve as mutual oracles.

#include <cstddef>
#include <vector>

#include "pqm/classical.hpp"
#include "pqm/quadrature.hpp"
#include "pqm/result.hpp"

namespace pqm {

struct PQParams {
  double p = 0.0;
  double q = 0.0;

  // Throws DomainError unless p, q are finite and non-negative.
  void validate() const;
  bool is_classical() const { return p == 0.0 && q == 0.0; }
};

// exp(-(sqrt(p) + sqrt(q))^2) = sup_{0<t<1} exp(-p/t - q/(1-t)).
double envelope_factor(const PQParams& pq);

// B(x,y;p,q) by quadrature. x must be positive unless p > 0 and y positive
// unless q > 0; arguments outside x, y > 0 set outside_classical_domain.
EvalResult extended_beta(double x, double y, const PQParams& pq, const QuadPolicy& policy = {});

// B(b+n, c-b; p,q) / B(b, c-b) for n = 0..count-1. `work` accumulates
// quadrature evaluations; `converged` is cleared if any coefficient failed.
std::vector<double> extended_beta_ratios(double b, double c, const PQParams& pq, std::size_t count,
                                         const QuadPolicy& policy, std::size_t& work, bool& converged);

// F_{p,q}(a,b;c;z) from
//   (1/B(b,c-b)) int_0^1 t^{b-1} (1-t)^{c-b-1} (1-zt)^{-a} exp(-p/t - q/(1-t)) dt,
// for c > b > 0 and z < 1.
EvalResult extended_gauss_integral(const HyperTriple& t, double z, const PQParams& pq,
                                   const QuadPolicy& policy = {});

// F_{p,q}(a,b;c;z) by its defining series, |z| < 1. Terms are added until the
// majorant E_{p,q} * (tail of 2F1(a,b;c;|z|)) meets the tolerance or n_max
// terms have been used.
EvalResult extended_gauss_series(const HyperTriple& t, double z, const PQParams& pq,
                                 std::size_t n_max, const QuadPolicy& policy = {});

// Phi_{p,q}(b;c;z) by its defining series with tail majorant E_{p,q} * tail of 1F1(b;c;|z|).
EvalResult extended_kummer_series(double b, double c, double z, const PQParams& pq,
                                  std::size_t n_max, const QuadPolicy& policy = {});

// Phi_{p,q}(b;c;z) from (1/B(b,c-b)) int_0^1 t^{b-1}(1-t)^{c-b-1} e^{zt} exp(-p/t - q/(1-t)) dt.
EvalResult extended_kummer_integral(double b, double c, double z, const PQParams& pq,
                                    const QuadPolicy& policy = {});

// Phi_{p,q}(b;c;z) for any real z. Uses the series for z >= kKummerSeriesFloor
// and the integral below it, where alternating-sign cancellation would eat the
// series' precision.
inline constexpr double kKummerSeriesFloor = -2.0;
EvalResult extended_kummer(double b, double c, double z, const PQParams& pq, const QuadPolicy& policy = {});

// E_{p,q} * 2F1(a,b;c;|z|), the majorant of |F_{p,q}(a,b;c;z)|.
double gauss_bound_rhs(const HyperTriple& t, double z, const PQParams& pq, const QuadPolicy& policy = {});

}  // namespace pqm
