#pragma once

// Double-exponential (tanh-sinh) quadrature on finite and semi-infinite
// intervals.
//
// The finite rule never samples an endpoint and clusters nodes doubly
// exponentially towards both ends, so integrands such as t^{x-1} with x < 1 or
// exp(-p/t) need no special handling. Semi-infinite integrals are mapped onto
// (0,1) by x = lo + u/(1-u) and reuse the same rule.
//
// Integrands may be written either as f(x) or as f(x, dist_lo, dist_hi). The
// second form receives the distances to the interval ends computed without
// cancellation, which matters whenever the integrand depends on (hi - x) near
// hi, e.g. (1-t)^{-1/2}. For semi-infinite integrals dist_hi is +infinity.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>

#include "pqm/errors.hpp"

namespace pqm {

struct QuadPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_refinements = 12;  // clamped to kMaxTanhSinhLevel
  std::size_t max_evals = std::size_t{1} << 20;

  // Throws ParameterError when an invariant is violated.
  void validate() const;

  double tolerance_for(double value) const {
    return std::max(abs_tol, rel_tol * std::fabs(value));
  }
};

struct IntegrationResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  std::size_t n_evals = 0;
  bool converged = false;
};

inline constexpr int kMaxTanhSinhLevel = 14;

namespace detail {

// One abscissa of the half-rule on (0,1): `offset` is the distance from the
// nearer endpoint, `weight` already contains the tanh-sinh Jacobian (but not
// the step length h).
struct TanhSinhNode {
  double offset;
  double weight;
};

// Nodes first introduced at `level` (step 2^-level), t >= 0 only. Level 0
// starts with the centre node t = 0, which is used once.
std::span<const TanhSinhNode> tanh_sinh_level(int level);

[[noreturn]] void throw_non_finite(double abscissa, double value);

// Conservative estimate of the round-off in a sum whose absolute terms add up
// to `magnitude`.
inline double roundoff_floor(double magnitude) {
  return 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
}

inline constexpr int kMinAcceptLevel = 3;

// Integrates g over (0,1). g(u, v) is called with u the distance from 0 and
// v = 1 - u the distance from 1, and must return the Jacobian-weighted
// integrand value (zero for nodes the caller wants to drop).
template <class G>
IntegrationResult tanh_sinh_unit(G&& g, const QuadPolicy& policy) {
  policy.validate();
  IntegrationResult res;
  double sum = 0.0;
  double abs_sum = 0.0;
  double previous = 0.0;
  const int top = std::min(policy.max_refinements, kMaxTanhSinhLevel);

  for (int level = 0; level <= top; ++level) {
    const auto nodes = tanh_sinh_level(level);
    const std::size_t needed = level == 0 ? 2 * nodes.size() - 1 : 2 * nodes.size();
    if (res.n_evals + needed > policy.max_evals) break;

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const TanhSinhNode& node = nodes[i];
      if (level == 0 && i == 0) {
        const double mid = node.weight * g(0.5, 0.5);
        sum += mid;
        abs_sum += std::fabs(mid);
        res.n_evals += 1;
        continue;
      }
      const double far = 1.0 - node.offset;
      const double left = g(node.offset, far);
      const double right = g(far, node.offset);
      sum += node.weight * (left + right);
      abs_sum += node.weight * (std::fabs(left) + std::fabs(right));
      res.n_evals += 2;
    }

    const double h = std::ldexp(1.0, -level);
    const double estimate = h * sum;
    res.value = estimate;
    if (level == 0) {
      res.abs_err_est = std::fabs(estimate);
    } else {
      res.abs_err_est = std::max(std::fabs(estimate - previous), roundoff_floor(h * abs_sum));
      if (level >= kMinAcceptLevel && res.abs_err_est <= policy.tolerance_for(estimate)) {
        res.converged = true;
        break;
      }
    }
    previous = estimate;
  }
  if (res.n_evals == 0) res.abs_err_est = std::numeric_limits<double>::infinity();
  return res;
}

// Abscissae with 1 - u below this are dropped from semi-infinite integrals
// (they map beyond x ~ 1e150 where the Jacobian 1/(1-u)^2 would overflow).
inline constexpr double kMinTailComplement = 1e-150;

}  // namespace detail

template <class F>
concept DistanceIntegrand = std::invocable<F&, double, double, double>;

template <class F>
concept PlainIntegrand = std::invocable<F&, double>;

// Integral of f over (lo, hi). Throws ParameterError for lo >= hi or an
// invalid policy and IntegrandError if f returns a non-finite value.
template <class F>
  requires DistanceIntegrand<F> || PlainIntegrand<F>
IntegrationResult integrate_finite(F&& f, double lo, double hi, const QuadPolicy& policy = {}) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ParameterError("integrate_finite: need finite lo < hi");
  }
  const double len = hi - lo;
  auto g = [&](double u, double v) -> double {
    const double dlo = len * u;
    const double dhi = len * v;
    const double x = u <= v ? lo + dlo : hi - dhi;
    double y;
    if constexpr (DistanceIntegrand<F>) {
      if (!(dlo > 0.0) || !(dhi > 0.0)) return 0.0;
      y = f(x, dlo, dhi);
    } else {
      if (!(x > lo) || !(x < hi)) return 0.0;
      y = f(x);
    }
    if (!std::isfinite(y)) detail::throw_non_finite(x, y);
    return len * y;
  };
  return detail::tanh_sinh_unit(g, policy);
}

// Integral of f over [lo, infinity). A non-decaying integrand shows up as a
// stagnating refinement sequence and yields converged == false.
template <class F>
  requires DistanceIntegrand<F> || PlainIntegrand<F>
IntegrationResult integrate_to_infinity(F&& f, double lo, const QuadPolicy& policy = {}) {
  if (!std::isfinite(lo)) throw ParameterError("integrate_to_infinity: lo must be finite");
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto g = [&](double u, double v) -> double {
    if (v < detail::kMinTailComplement) return 0.0;
    const double dlo = u / v;
    const double x = lo + dlo;
    double y;
    if constexpr (DistanceIntegrand<F>) {
      if (!(dlo > 0.0)) return 0.0;
      y = f(x, dlo, inf);
    } else {
      if (!(x > lo)) return 0.0;
      y = f(x);
    }
    if (!std::isfinite(y)) detail::throw_non_finite(x, y);
    return (y / v) / v;
  };
  return detail::tanh_sinh_unit(g, policy);
}

}  // namespace pqm
