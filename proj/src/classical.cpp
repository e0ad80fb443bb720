#include "pqm/classical.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "pqm/errors.hpp"

namespace pqm {

void HyperTriple::require_standard_order(const char* where) const {
  if (!has_standard_order()) {
    throw DomainError(std::string(where) + ": requires c > b > 0");
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: requires finite x > 0");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant: std::lgamma writes the global signgam
#else
  return std::lgamma(x);
#endif
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta: requires x > 0 and y > 0");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: requires n >= 0");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= a + k;
  return prod;
}

namespace {

constexpr double kSeriesTarget = 0.01;

struct SeriesSum {
  double sum = 0.0;
  double err = 0.0;
  std::size_t terms = 0;
  bool converged = false;
};

// Sums 1 + t_1 + t_2 + ... where t_{n+1} = t_n * ratio(n). Stops after three
// consecutive terms below the target relative to the partial sum, once the
// geometric tail bound |t_{n+1}| / (1 - rho) with rho = max(|ratio|, limit)
// is within it. Terms are cheap, so the target is 1% of the requested
// tolerance; two truncations of equal functions then agree to within it.
template <class Ratio>
SeriesSum sum_series(Ratio ratio, double limit_ratio, const QuadPolicy& policy) {
  SeriesSum out;
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  int small = 0;
  for (std::size_t n = 0;; ++n) {
    if (n >= policy.max_evals) break;
    term *= ratio(n);
    sum += term;
    abs_sum += std::fabs(term);
    out.terms = n + 1;
    if (term == 0.0) {
      tail = 0.0;
      break;
    }
    small = std::fabs(term) <= kSeriesTarget * policy.rel_tol * std::fabs(sum) ? small + 1 : 0;
    if (small >= 3) {
      const double next_ratio = std::fabs(ratio(n + 1));
      const double rho = std::max(next_ratio, limit_ratio);
      if (rho < 1.0) {
        tail = std::fabs(term) * next_ratio / (1.0 - rho);
        if (tail <= kSeriesTarget * policy.tolerance_for(sum)) break;
      }
    }
  }
  out.converged = tail <= policy.tolerance_for(sum);
  out.sum = sum;
  out.err = tail + detail::roundoff_floor(abs_sum);
  return out;
}

bool is_nonpositive_integer(double c) { return c <= 0.0 && c == std::floor(c); }

}  // namespace

EvalResult gauss_2f1(const HyperTriple& t, double z, const QuadPolicy& policy) {
  policy.validate();
  if (!std::isfinite(z) || !(z < 1.0)) throw DomainError("gauss_2f1: requires z < 1");
  if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c) ||
      is_nonpositive_integer(t.c)) {
    throw DomainError("gauss_2f1: c must be finite and not a non-positive integer");
  }
  double a = t.a;
  double b = t.b;
  const double c = t.c;
  double w = z;
  double prefactor = 1.0;
  if (z < 0.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a,c-b;c;z/(z-1)) = (1-z)^{-b} 2F1(c-a,b;c;z/(z-1)).
    // Pick the form whose numerator parameters are non-negative.
    w = z / (z - 1.0);
    const double log1mz = std::log1p(-z);
    const bool first_positive = a >= 0.0 && c - b >= 0.0;
    const bool second_positive = c - a >= 0.0 && b >= 0.0;
    if (first_positive || !second_positive) {
      prefactor = std::exp(-a * log1mz);
      b = c - b;
    } else {
      prefactor = std::exp(-b * log1mz);
      a = c - a;
    }
  }
  const auto ratio = [&](std::size_t n) {
    const double k = static_cast<double>(n);
    return (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
  };
  const SeriesSum s = sum_series(ratio, std::fabs(w), policy);
  return EvalResult{prefactor * s.sum, prefactor * s.err, s.terms, s.converged};
}

EvalResult kummer_1f1(double b, double c, double z, const QuadPolicy& policy) {
  policy.validate();
  if (!(c > b && b > 0.0) || !std::isfinite(c)) throw DomainError("kummer_1f1: requires c > b > 0");
  if (!std::isfinite(z)) throw DomainError("kummer_1f1: z must be finite");
  // Kummer's transformation keeps every summed term positive.
  const double top = z < 0.0 ? c - b : b;
  const double x = std::fabs(z);
  const double shift = z < 0.0 ? z : 0.0;

  constexpr double kRescale = 1e280;
  const double log_rescale = std::log(kRescale);
  double log_scale = 0.0;
  double term = 1.0;
  double sum = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  bool converged = x == 0.0;
  std::size_t n = 0;
  if (converged) tail = 0.0;
  while (!converged && n < policy.max_evals) {
    const double k = static_cast<double>(n);
    term *= (top + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    ++n;
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_scale += log_rescale;
    }
    // For m >= n the term ratio is at most x / (m + 1) because top < c.
    const double rho = x / (static_cast<double>(n) + 1.0);
    if (rho < 0.5) {
      tail = term * rho / (1.0 - rho);
      if (tail <= kSeriesTarget * policy.rel_tol * sum) break;
    }
  }
  converged = converged || tail <= policy.rel_tol * sum;
  const double scale = std::exp(log_scale + shift);
  return EvalResult{scale * sum, scale * (tail + detail::roundoff_floor(sum)), n, converged};
}

double luke_bound_rhs(const HyperTriple& t, double z) {
  const double a = t.a;
  const double b = t.b;
  const double c = t.c;
  if (!(b > 0.0 && b <= 1.0) || !(a > 0.0) || !(c >= a) || !std::isfinite(c)) {
    throw DomainError("luke_bound_rhs: requires b in (0,1] and c >= a > 0");
  }
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("luke_bound_rhs: requires z > 0");
  const double lead = 2.0 * a * b * (c + 1.0) / (c * (a + 1.0) * (b + 1.0));
  const double bracket = 1.0 - 2.0 * (c + 1.0) / (2.0 * (c + 1.0) + (a + 1.0) * (b + 1.0) * z);
  return 1.0 - lead * bracket;
}

namespace {

// B_{2j} / (2j)!, j = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

// Euler-Maclaurin correction sum_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}.
double euler_maclaurin_corrections(double s, double n) {
  double total = 0.0;
  double rising = s;                          // (s)_{2j-1}
  double power = std::pow(n, -s - 1.0);       // N^{-s-2j+1}
  const double inv_n2 = 1.0 / (n * n);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * power;
    total += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(total)) break;
    const double k = static_cast<double>(2 * j + 1);
    rising *= (s + k) * (s + k + 1.0);
    power *= inv_n2;
  }
  return total;
}

// Shift so that a + shift exceeds both 16 and s, keeping the asymptotic
// corrections well inside their convergent range.
std::size_t em_shift(double s, double a) {
  const double target = std::max(16.0, std::fabs(s) + 8.0);
  return a >= target ? 0 : static_cast<std::size_t>(std::ceil(target - a));
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0) || !std::isfinite(s) || !std::isfinite(a)) {
    throw DomainError("hurwitz_zeta: requires s > 1 and a > 0");
  }
  const std::size_t m = em_shift(s, a);
  double head = 0.0;
  for (std::size_t k = m; k-- > 0;) head += std::pow(a + static_cast<double>(k), -s);
  const double n = a + static_cast<double>(m);
  const double tail = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s) +
                      euler_maclaurin_corrections(s, n);
  return head + tail;
}

double alternating_hurwitz_zeta(double s, double a) {
  if (!(s > 0.0) || !(a > 0.0) || !std::isfinite(s) || !std::isfinite(a)) {
    throw DomainError("alternating_hurwitz_zeta: requires s > 0 and a > 0");
  }
  // sum (-1)^n (a+n)^{-s} = head over 2M terms + 2^{-s} [Z(s,A) - Z(s,A+1/2)],
  // A = (a + 2M)/2, with each Z expanded by Euler-Maclaurin.
  const std::size_t half = (em_shift(s, 0.5 * a) + 1);
  const std::size_t m2 = 2 * half;
  double head = 0.0;
  for (std::size_t k = m2; k-- > 0;) {
    const double v = std::pow(a + static_cast<double>(k), -s);
    head += (k % 2 == 0) ? v : -v;
  }
  const double lo = 0.5 * (a + static_cast<double>(m2));
  const double hi = lo + 0.5;
  // (lo^{1-s} - hi^{1-s}) / (s - 1), stable through s = 1.
  const double log_ratio = std::log(hi / lo);
  const double x = (1.0 - s) * log_ratio;
  const double integral_part =
      std::pow(lo, 1.0 - s) * (std::fabs(x) < 1e-300 ? log_ratio : std::expm1(x) / (1.0 - s));
  const double endpoint_part = 0.5 * (std::pow(lo, -s) - std::pow(hi, -s));
  const double corrections = euler_maclaurin_corrections(s, lo) - euler_maclaurin_corrections(s, hi);
  return head + std::pow(2.0, -s) * (integral_part + endpoint_part + corrections);
}

}  // namespace pqm
