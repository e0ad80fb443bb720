#include "pqm/extended.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pqm/errors.hpp"

namespace pqm {

void PQParams::validate() const {
  if (!(p >= 0.0) || !(q >= 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("PQParams: requires finite p >= 0 and q >= 0");
  }
}

double envelope_factor(const PQParams& pq) {
  pq.validate();
  const double root = std::sqrt(pq.p) + std::sqrt(pq.q);
  return std::exp(-root * root);
}

namespace {

EvalResult from_quadrature(const IntegrationResult& r, double scale) {
  return EvalResult{r.value * scale, r.abs_err_est * std::fabs(scale), r.n_evals, r.converged};
}

void require_unit_interval_argument(double z, const char* where) {
  if (!std::isfinite(z) || !(std::fabs(z) < 1.0)) {
    throw DomainError(std::string(where) + ": requires |z| < 1");
  }
}

}  // namespace

EvalResult extended_beta(double x, double y, const PQParams& pq, const QuadPolicy& policy) {
  pq.validate();
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("extended_beta: x and y must be finite");
  if ((pq.p == 0.0 && !(x > 0.0)) || (pq.q == 0.0 && !(y > 0.0))) {
    throw DomainError("extended_beta: requires x > 0 unless p > 0 and y > 0 unless q > 0");
  }
  const double p = pq.p;
  const double q = pq.q;
  const auto integrand = [=](double, double t, double one_minus_t) {
    return std::exp((x - 1.0) * std::log(t) + (y - 1.0) * std::log(one_minus_t) - p / t -
                    q / one_minus_t);
  };
  EvalResult out = from_quadrature(integrate_finite(integrand, 0.0, 1.0, policy), 1.0);
  out.outside_classical_domain = !(x > 0.0 && y > 0.0);
  return out;
}

std::vector<double> extended_beta_ratios(double b, double c, const PQParams& pq, std::size_t count,
                                         const QuadPolicy& policy, std::size_t& work, bool& converged) {
  const double norm = beta(b, c - b);
  std::vector<double> ratios;
  ratios.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const EvalResult eb = extended_beta(b + static_cast<double>(n), c - b, pq, policy);
    work += eb.n_work;
    converged = converged && eb.converged;
    ratios.push_back(eb.value / norm);
  }
  return ratios;
}

EvalResult extended_gauss_integral(const HyperTriple& t, double z, const PQParams& pq,
                                   const QuadPolicy& policy) {
  pq.validate();
  t.require_standard_order("extended_gauss_integral");
  if (!std::isfinite(t.a)) throw DomainError("extended_gauss_integral: a must be finite");
  if (!std::isfinite(z) || !(z < 1.0)) throw DomainError("extended_gauss_integral: requires z < 1");
  const double a = t.a;
  const double b = t.b;
  const double c = t.c;
  const double p = pq.p;
  const double q = pq.q;
  const double log_norm = log_gamma(b) + log_gamma(c - b) - log_gamma(c);
  const auto integrand = [=](double, double s, double one_minus_s) {
    // 1 - z s, written to stay accurate when z is close to 1 and s close to 1.
    const double log_kernel =
        z > 0.0 ? std::log((1.0 - z) + z * one_minus_s) : std::log1p(-z * s);
    return std::exp((b - 1.0) * std::log(s) + (c - b - 1.0) * std::log(one_minus_s) -
                    a * log_kernel - p / s - q / one_minus_s - log_norm);
  };
  return from_quadrature(integrate_finite(integrand, 0.0, 1.0, policy), 1.0);
}

EvalResult extended_gauss_series(const HyperTriple& t, double z, const PQParams& pq,
                                 std::size_t n_max, const QuadPolicy& policy) {
  pq.validate();
  policy.validate();
  t.require_standard_order("extended_gauss_series");
  require_unit_interval_argument(z, "extended_gauss_series");
  const double a = t.a;
  const double b = t.b;
  const double c = t.c;
  const double envelope = envelope_factor(pq);
  const double norm = beta(b, c - b);
  const double az = std::fabs(z);

  EvalResult out;
  double coef = 1.0;       // (a)_n z^n / n!
  double classical = 1.0;  // |(a)_n| (b)_n / ((c)_n n!) |z|^n
  double tail = std::numeric_limits<double>::infinity();
  bool inner_ok = true;
  for (std::size_t n = 0; n < std::max<std::size_t>(n_max, 1); ++n) {
    const double k = static_cast<double>(n);
    const EvalResult eb = extended_beta(b + k, c - b, pq, policy);
    inner_ok = inner_ok && eb.converged;
    out.n_work += eb.n_work;
    out.value += coef * eb.value / norm;
    out.err_est += std::fabs(coef) * eb.err_est / norm;

    const double classical_next = classical * std::fabs((a + k) * (b + k) / ((c + k) * (k + 1.0))) * az;
    const double ratio_after =
        std::fabs((a + k + 1.0) * (b + k + 1.0) / ((c + k + 1.0) * (k + 2.0))) * az;
    const double rho = std::max(ratio_after, az);
    if (classical_next == 0.0) {
      tail = 0.0;
    } else if (rho < 1.0) {
      tail = envelope * classical_next / (1.0 - rho);
    }
    if (tail <= policy.tolerance_for(out.value)) {
      out.converged = inner_ok;
      break;
    }
    coef *= (a + k) / (k + 1.0) * z;
    classical = classical_next;
  }
  out.err_est += tail;
  return out;
}

EvalResult extended_kummer_series(double b, double c, double z, const PQParams& pq,
                                  std::size_t n_max, const QuadPolicy& policy) {
  pq.validate();
  policy.validate();
  if (!(c > b && b > 0.0) || !std::isfinite(c)) throw DomainError("extended_kummer: requires c > b > 0");
  if (!std::isfinite(z)) throw DomainError("extended_kummer: z must be finite");
  const double envelope = envelope_factor(pq);
  const double norm = beta(b, c - b);
  const double az = std::fabs(z);

  EvalResult out;
  double coef = 1.0;       // z^n / n!
  double classical = 1.0;  // (b)_n / ((c)_n n!) |z|^n
  double tail = std::numeric_limits<double>::infinity();
  bool inner_ok = true;
  for (std::size_t n = 0; n < std::max<std::size_t>(n_max, 1); ++n) {
    const double k = static_cast<double>(n);
    const EvalResult eb = extended_beta(b + k, c - b, pq, policy);
    inner_ok = inner_ok && eb.converged;
    out.n_work += eb.n_work;
    out.value += coef * eb.value / norm;
    out.err_est += std::fabs(coef) * eb.err_est / norm;

    const double classical_next = classical * (b + k) / ((c + k) * (k + 1.0)) * az;
    // Later ratios are at most |z| / (m + 1) since b < c.
    const double rho = az / (k + 2.0);
    if (classical_next == 0.0) {
      tail = 0.0;
    } else if (rho < 1.0) {
      tail = envelope * classical_next / (1.0 - rho);
    }
    if (tail <= policy.tolerance_for(out.value)) {
      out.converged = inner_ok;
      break;
    }
    coef *= z / (k + 1.0);
    classical = classical_next;
  }
  out.err_est += tail;
  return out;
}

EvalResult extended_kummer_integral(double b, double c, double z, const PQParams& pq,
                                    const QuadPolicy& policy) {
  pq.validate();
  if (!(c > b && b > 0.0) || !std::isfinite(c)) throw DomainError("extended_kummer: requires c > b > 0");
  if (!std::isfinite(z)) throw DomainError("extended_kummer: z must be finite");
  const double p = pq.p;
  const double q = pq.q;
  const double log_norm = log_gamma(b) + log_gamma(c - b) - log_gamma(c);
  const auto integrand = [=](double, double s, double one_minus_s) {
    return std::exp((b - 1.0) * std::log(s) + (c - b - 1.0) * std::log(one_minus_s) + z * s -
                    p / s - q / one_minus_s - log_norm);
  };
  return from_quadrature(integrate_finite(integrand, 0.0, 1.0, policy), 1.0);
}

EvalResult extended_kummer(double b, double c, double z, const PQParams& pq, const QuadPolicy& policy) {
  if (z >= kKummerSeriesFloor) {
    constexpr std::size_t kMaxTerms = 10000;
    return extended_kummer_series(b, c, z, pq, kMaxTerms, policy);
  }
  return extended_kummer_integral(b, c, z, pq, policy);
}

double gauss_bound_rhs(const HyperTriple& t, double z, const PQParams& pq, const QuadPolicy& policy) {
  pq.validate();
  t.require_standard_order("gauss_bound_rhs");
  require_unit_interval_argument(z, "gauss_bound_rhs");
  return envelope_factor(pq) * gauss_2f1(t, std::fabs(z), policy).value;
}

}  // namespace pqm
