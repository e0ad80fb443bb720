#include "pqm/mathieu.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "kernel.hpp"
#include "pqm/errors.hpp"

namespace pqm {

using detail::Kernel;

void MathieuParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("mathieu: requires lambda > 0");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("mathieu: requires eta > 0");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("mathieu: requires r > 0");
  if (!(c > b && b > 0.0) || !std::isfinite(c)) throw DomainError("mathieu: requires c > b > 0");
  pq.validate();
  if (max_terms < 1) throw ParameterError("mathieu: max_terms must be positive");
  if (!(r * r <= seq.a1())) throw DomainError("mathieu: requires r^2 <= a_1");
}

void MathieuParams::validate_for_bounds() const {
  validate();
  if (!(lambda <= 1.0)) throw DomainError("mathieu bound: requires lambda in (0, 1]");
  if (!(r * r < seq.a1())) throw DomainError("mathieu bound: requires r^2 < a_1");
  if (!(b <= 1.0)) throw DomainError("mathieu bound: Luke's bound requires b <= 1");
  if (!(c >= lambda + 1.0)) throw DomainError("mathieu bound: Luke's bound requires c >= lambda + 1");
}

const char* to_string(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::direct:
      return "direct";
    case SeriesMethod::theorem1_integral:
      return "theorem1_integral";
    case SeriesMethod::bound_rhs:
      return "bound_rhs";
  }
  return "unknown";
}

namespace {

// The analytic tail starts once a_{N+1} >= kTailSeparation r^2, so the
// expansion variable r^2/x never exceeds 1/16.
constexpr std::int64_t kMinHead = 32;
constexpr double kTailSeparation = 16.0;
constexpr std::int64_t kFirstCheckpoint = 64;

std::int64_t head_length(const SequenceSpec& seq, double r2) {
  std::int64_t n = kMinHead;
  while (seq.term(n + 1) < kTailSeparation * r2) n *= 2;
  return n;
}

// x^{-alpha} (x + r^2)^{-beta}
double power_weight(double x, double alpha, double beta, double r2) {
  return std::exp(-alpha * std::log(x) - beta * std::log(x + r2));
}

void require_direct_convergence(const SequenceSpec& seq, double lambda, double eta, const char* where) {
  if (const auto& law = seq.power_law(); law && !(lambda + eta > 1.0 / law->exponent)) {
    throw DivergenceError(std::string(where) + ": series diverges, needs lambda + eta > 1/k");
  }
}

void require_integral_convergence(const SequenceSpec& seq, double alpha, double beta, bool alternating,
                                  const char* where) {
  if (alternating) {
    if (!(alpha + beta > 1.0)) {
      throw DivergenceError(std::string(where) + ": integral diverges, needs alpha + beta > 1");
    }
    return;
  }
  if (const auto& law = seq.power_law(); law && !(alpha + beta > 1.0 + 1.0 / law->exponent)) {
    throw DivergenceError(std::string(where) + ": integral diverges, needs alpha + beta > 1 + 1/k");
  }
}

void finish(SeriesResult& out, const Kernel& kernel, bool inner_ok, const QuadPolicy& policy) {
  out.n_work += kernel.work();
  out.converged = out.converged && inner_ok && kernel.converged() &&
                  out.tail_bound <= policy.tolerance_for(out.value);
}

// ---------------------------------------------------------------------------
// Direct summation

SeriesResult power_series(const MathieuParams& params, const Kernel& kernel, bool alternating,
                          const QuadPolicy& policy) {
  const auto law = *params.seq.power_law();
  const double s = law.scale;
  const double k = law.exponent;
  const double r2 = params.r * params.r;
  const double lambda = params.lambda;
  const double eta = params.eta;
  const std::int64_t head = head_length(params.seq, r2);

  double sum = 0.0;
  double err = 0.0;
  for (std::int64_t n = 1; n <= head; ++n) {
    const double a = params.seq.term(n);
    const EvalResult f = kernel.value(lambda, -r2 / a);
    const double w = power_weight(a, lambda, eta, r2);
    sum += (alternating && n % 2 == 0) ? -f.value * w : f.value * w;
    err += f.err_est * w;
  }

  // sum_{n>N} a_n^{-sigma} = s^{-sigma} zeta(k sigma, N+1), and with signs
  // (-1)^{n-1} it is (-1)^N s^{-sigma} eta(k sigma, N+1).
  const double sigma0 = lambda + eta;
  const double rho = r2 / s;
  const double scale = std::pow(s, -sigma0);
  const double sign = (alternating && head % 2 == 1) ? -1.0 : 1.0;
  const double start = static_cast<double>(head + 1);
  const auto tail = detail::expand_tail(kernel, lambda, eta, [&](std::size_t m) {
    const double sigma = sigma0 + static_cast<double>(m);
    const double weight = scale * std::pow(rho, static_cast<double>(m));
    if (weight == 0.0) return 0.0;
    return alternating ? sign * weight * alternating_hurwitz_zeta(k * sigma, start)
                       : weight * hurwitz_zeta(k * sigma, start);
  });

  SeriesResult out;
  out.method = SeriesMethod::direct;
  out.value = sum + tail.value;
  out.tail_bound = tail.err;
  out.err_est = err + tail.err;
  out.n_terms = static_cast<std::size_t>(head);
  out.n_work = static_cast<std::size_t>(head) + tail.orders;
  out.converged = tail.converged;
  finish(out, kernel, true, policy);
  return out;
}

// Remainder majorant for a general sequence: F <= sup F and h(a(x)) is
// decreasing, so sum_{n>N} h(a_n) <= int_N^inf h(a(x)) dx.
SeriesResult custom_series(const MathieuParams& params, const Kernel& kernel, const QuadPolicy& policy) {
  const double r2 = params.r * params.r;
  const double lambda = params.lambda;
  const double eta = params.eta;
  const auto max_n = static_cast<std::int64_t>(params.max_terms);

  SeriesResult out;
  out.method = SeriesMethod::direct;
  out.tail_bound = std::numeric_limits<double>::infinity();
  double err = 0.0;
  bool inner_ok = true;
  std::int64_t checkpoint = kFirstCheckpoint;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const double a = params.seq.term(n);
    const EvalResult f = kernel.value(lambda, -r2 / a);
    const double w = power_weight(a, lambda, eta, r2);
    out.value += f.value * w;
    err += f.err_est * w;
    out.n_terms = static_cast<std::size_t>(n);
    if (n != checkpoint && n != max_n) continue;
    checkpoint *= 2;
    const auto rest = integrate_to_infinity(
        [&](double x) { return power_weight(params.seq.at(x), lambda, eta, r2); },
        static_cast<double>(n), policy);
    inner_ok = inner_ok && rest.converged;
    out.n_work += rest.n_evals;
    out.tail_bound = kernel.sup_bound() * (rest.value + rest.abs_err_est);
    if (out.tail_bound <= policy.tolerance_for(out.value)) break;
  }
  out.err_est = err + out.tail_bound;
  out.n_work += out.n_terms;
  out.converged = true;
  finish(out, kernel, inner_ok, policy);
  return out;
}

// Leibniz: the summands decrease in n (F(lambda,b;c;-r^2/x) x^{-lambda} is
// decreasing in x), so the remainder is bounded by the first omitted term.
SeriesResult custom_alternating_series(const MathieuParams& params, const Kernel& kernel,
                                       const QuadPolicy& policy) {
  const double r2 = params.r * params.r;
  const auto max_n = static_cast<std::int64_t>(params.max_terms);
  const auto term = [&](std::int64_t n, double& err) {
    const double a = params.seq.term(n);
    const EvalResult f = kernel.value(params.lambda, -r2 / a);
    const double w = power_weight(a, params.lambda, params.eta, r2);
    err += f.err_est * w;
    return f.value * w;
  };

  SeriesResult out;
  out.method = SeriesMethod::direct;
  double err = 0.0;
  double next = term(1, err);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    out.value += n % 2 == 1 ? next : -next;
    out.n_terms = static_cast<std::size_t>(n);
    next = term(n + 1, err);
    out.tail_bound = next;
    if (next <= policy.tolerance_for(out.value)) break;
  }
  out.err_est = err + out.tail_bound;
  out.n_work = out.n_terms + 1;
  out.converged = true;
  finish(out, kernel, true, policy);
  return out;
}

// ---------------------------------------------------------------------------
// Integrals against the counting function

struct WeightedIntegral {
  const SequenceSpec& seq;
  double r;
  std::size_t max_terms;
  double alpha;
  double beta;
  bool alternating;
};

// int_{a_N}^{a_{N+1}} F(alpha,b;c;-r^2/x) x^{-alpha} (x+r^2)^{-beta} dx
IntegrationResult panel(const WeightedIntegral& w, const Kernel& kernel, double lo, double hi,
                        const QuadPolicy& policy) {
  const double r2 = w.r * w.r;
  return integrate_finite(
      [&](double x) { return kernel.value(w.alpha, -r2 / x).value * power_weight(x, w.alpha, w.beta, r2); },
      lo, hi, policy);
}

SeriesResult power_weighted(const WeightedIntegral& w, const Kernel& kernel, const QuadPolicy& policy) {
  const auto law = *w.seq.power_law();
  const double s = law.scale;
  const double k = law.exponent;
  const double r2 = w.r * w.r;
  const std::int64_t head = head_length(w.seq, r2);

  SeriesResult out;
  out.method = SeriesMethod::theorem1_integral;
  bool inner_ok = true;
  double sum = 0.0;
  double err = 0.0;
  for (std::int64_t n = 1; n <= head; ++n) {
    if (w.alternating && n % 2 == 0) continue;  // parity weight vanishes
    const double weight = w.alternating ? 1.0 : static_cast<double>(n);
    const auto res = panel(w, kernel, w.seq.term(n), w.seq.term(n + 1), policy);
    sum += weight * res.value;
    err += weight * res.abs_err_est;
    out.n_work += res.n_evals;
    inner_ok = inner_ok && res.converged;
  }

  // Beyond A = a_{N+1}:
  //   int_A^inf [a^{-1}(x)] x^{-sigma} dx = (N A^{1-sigma} + sum_{n>N} a_n^{1-sigma}) / (sigma-1)
  //   int_A^inf parity      x^{-sigma} dx = sum_{j>=n0} (-1)^{j-n0} a_j^{1-sigma} / (sigma-1)
  // with n0 the first odd index above N.
  const double big_a = w.seq.term(head + 1);
  const double sigma0 = w.alpha + w.beta;
  const double rho = r2 / s;
  const double scale = std::pow(s, 1.0 - sigma0);
  const double edge = static_cast<double>(head) * std::pow(big_a, 1.0 - sigma0);
  const double first_odd = static_cast<double>(head % 2 == 0 ? head + 1 : head + 2);
  const double start = static_cast<double>(head + 1);
  const auto tail = detail::expand_tail(kernel, w.alpha, w.beta, [&](std::size_t m) {
    const double md = static_cast<double>(m);
    const double sigma = sigma0 + md;
    const double zeta_weight = scale * std::pow(rho, md);
    if (w.alternating) {
      if (zeta_weight == 0.0) return 0.0;
      return zeta_weight * alternating_hurwitz_zeta(k * (sigma - 1.0), first_odd) / (sigma - 1.0);
    }
    const double edge_part = edge * std::pow(r2 / big_a, md);
    const double zeta_part = zeta_weight == 0.0 ? 0.0 : zeta_weight * hurwitz_zeta(k * (sigma - 1.0), start);
    return (edge_part + zeta_part) / (sigma - 1.0);
  });

  out.value = sum + tail.value;
  out.tail_bound = tail.err;
  out.err_est = err + tail.err;
  out.n_terms = static_cast<std::size_t>(head);
  out.n_work += tail.orders;
  out.converged = tail.converged;
  finish(out, kernel, inner_ok, policy);
  return out;
}

// General sequences: panels until a majorant of the remainder meets the
// tolerance. [a^{-1}(x)] <= a^{-1}(x) and the parity weight is <= 1.
SeriesResult custom_weighted(const WeightedIntegral& w, const Kernel& kernel, const QuadPolicy& policy) {
  const double r2 = w.r * w.r;
  const auto max_n = static_cast<std::int64_t>(w.max_terms);

  SeriesResult out;
  out.method = SeriesMethod::theorem1_integral;
  out.tail_bound = std::numeric_limits<double>::infinity();
  bool inner_ok = true;
  double err = 0.0;
  std::int64_t checkpoint = kFirstCheckpoint;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    out.n_terms = static_cast<std::size_t>(n);
    if (!(w.alternating && n % 2 == 0)) {
      const double weight = w.alternating ? 1.0 : static_cast<double>(n);
      const auto res = panel(w, kernel, w.seq.term(n), w.seq.term(n + 1), policy);
      out.value += weight * res.value;
      err += weight * res.abs_err_est;
      out.n_work += res.n_evals;
      inner_ok = inner_ok && res.converged;
    }
    if (n != checkpoint && n != max_n) continue;
    checkpoint *= 2;
    const double big_a = w.seq.term(n + 1);
    double rest = 0.0;
    if (w.alternating) {
      rest = closed_tail_2f1(big_a, w.alpha, w.beta, w.r, policy);
    } else {
      const auto res = integrate_to_infinity(
          [&](double x) { return w.seq.inverse(x) * power_weight(x, w.alpha, w.beta, r2); }, big_a, policy);
      inner_ok = inner_ok && res.converged;
      out.n_work += res.n_evals;
      rest = res.value + res.abs_err_est;
    }
    out.tail_bound = kernel.sup_bound() * rest;
    if (out.tail_bound <= policy.tolerance_for(out.value)) break;
  }
  out.err_est = err + out.tail_bound;
  out.converged = true;
  finish(out, kernel, inner_ok, policy);
  return out;
}

SeriesResult weighted_integral(const WeightedIntegral& w, const Kernel& kernel, const QuadPolicy& policy,
                               const char* where) {
  require_integral_convergence(w.seq, w.alpha, w.beta, w.alternating, where);
  return w.seq.power_law() ? power_weighted(w, kernel, policy) : custom_weighted(w, kernel, policy);
}

EvalResult to_eval(const SeriesResult& s) {
  return EvalResult{s.value, s.err_est, s.n_work, s.converged};
}

SeriesResult theorem1(const MathieuParams& params, const QuadPolicy& policy, KernelKind kind,
                      bool alternating) {
  params.validate();
  policy.validate();
  const char* where = alternating ? "mathieu_alt_via_theorem1" : "mathieu_via_theorem1";
  // One kernel for both addends so the Beta-ratio cache is shared.
  const Kernel kernel = Kernel::for_series(kind, params, policy);
  const WeightedIntegral first{params.seq, params.r, params.max_terms, params.lambda + 1.0, params.eta,
                               alternating};
  const WeightedIntegral second{params.seq, params.r, params.max_terms, params.lambda, params.eta + 1.0,
                                alternating};
  const SeriesResult i1 = weighted_integral(first, kernel, policy, where);
  const SeriesResult i2 = weighted_integral(second, kernel, policy, where);

  SeriesResult out;
  out.method = SeriesMethod::theorem1_integral;
  out.value = params.lambda * i1.value + params.eta * i2.value;
  out.tail_bound = params.lambda * i1.tail_bound + params.eta * i2.tail_bound;
  out.err_est = params.lambda * i1.err_est + params.eta * i2.err_est;
  out.n_terms = i1.n_terms + i2.n_terms;
  out.n_work = i1.n_work + i2.n_work;
  out.converged = i1.converged && i2.converged && out.tail_bound <= policy.tolerance_for(out.value);
  return out;
}

}  // namespace

double mathieu_term(const MathieuParams& params, std::int64_t n, const QuadPolicy& policy, KernelKind kernel) {
  params.validate();
  if (n < 1) throw DomainError("mathieu_term: requires n >= 1");
  const double r2 = params.r * params.r;
  const double a = params.seq.term(n);
  const Kernel k = Kernel::for_series(kernel, params, policy);
  return k.value(params.lambda, -r2 / a).value * power_weight(a, params.lambda, params.eta, r2);
}

SeriesResult mathieu_direct(const MathieuParams& params, const QuadPolicy& policy, KernelKind kernel) {
  params.validate();
  policy.validate();
  require_direct_convergence(params.seq, params.lambda, params.eta, "mathieu_direct");
  const Kernel k = Kernel::for_series(kernel, params, policy);
  return params.seq.power_law() ? power_series(params, k, false, policy) : custom_series(params, k, policy);
}

SeriesResult mathieu_alternating_direct(const MathieuParams& params, const QuadPolicy& policy,
                                        KernelKind kernel) {
  params.validate();
  policy.validate();
  const Kernel k = Kernel::for_series(kernel, params, policy);
  return params.seq.power_law() ? power_series(params, k, true, policy)
                                : custom_alternating_series(params, k, policy);
}

EvalResult cahen_integral(double alpha, double beta, const MathieuParams& params, bool alternating,
                          const QuadPolicy& policy, KernelKind kernel) {
  params.validate();
  policy.validate();
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("cahen_integral: requires alpha > 0 and beta > 0");
  }
  const Kernel k = Kernel::for_series(kernel, params, policy);
  const WeightedIntegral w{params.seq, params.r, params.max_terms, alpha, beta, alternating};
  return to_eval(weighted_integral(w, k, policy, "cahen_integral"));
}

SeriesResult mathieu_via_theorem1(const MathieuParams& params, const QuadPolicy& policy, KernelKind kernel) {
  return theorem1(params, policy, kernel, false);
}

SeriesResult mathieu_alt_via_theorem1(const MathieuParams& params, const QuadPolicy& policy,
                                      KernelKind kernel) {
  return theorem1(params, policy, kernel, true);
}

EvalResult u_integral(const SequenceSpec& seq, double lambda, double eta, double r, const QuadPolicy& policy) {
  policy.validate();
  if (!std::isfinite(lambda) || !std::isfinite(eta)) throw DomainError("u_integral: lambda and eta must be finite");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("u_integral: requires r >= 0");
  const Kernel unit = Kernel::unit(policy);
  const WeightedIntegral w{seq, r, MathieuParams{}.max_terms, lambda, eta, false};
  return to_eval(weighted_integral(w, unit, policy, "u_integral"));
}

double closed_tail_2f1(double a1, double lambda, double eta, double r, const QuadPolicy& policy) {
  if (!(a1 > 0.0) || !std::isfinite(a1)) throw DomainError("closed_tail_2f1: requires a1 > 0");
  if (!(eta >= 0.0) || !std::isfinite(eta) || !std::isfinite(lambda)) {
    throw DomainError("closed_tail_2f1: requires finite lambda and eta >= 0");
  }
  if (!(r >= 0.0) || !(r * r < a1)) throw DomainError("closed_tail_2f1: requires 0 <= r^2 < a1");
  const double excess = lambda + eta - 1.0;
  if (!(excess > 0.0)) throw DivergenceError("closed_tail_2f1: integral diverges, needs lambda + eta > 1");
  // x = 1/t turns the integral into int_0^{1/a1} t^{mu-1} (1 + r^2 t)^{-eta} dt with
  // mu = lambda + eta - 1, i.e. 2F1(eta, mu; mu + 1; -r^2/a1) a1^{-mu} / mu. The third
  // parameter mu + 1 coincides with the often-quoted eta + 1 only for lambda = 1.
  const EvalResult f = gauss_2f1(HyperTriple{eta, excess, excess + 1.0}, -r * r / a1, policy);
  if (!f.converged) throw ConvergenceError("closed_tail_2f1: 2F1 did not converge");
  return f.value / (excess * std::pow(a1, excess));
}

namespace {

struct LukeCoefficients {
  double outer;  // 1 - 2 a b (c+1) / (c (a+1) (b+1))
  double inner;  // 4 a b (c+1)^2 / (c (a+1) (b+1))
  double denom;  // (a+1)(b+1) r^2 + 2 (c+1) a_1
};

LukeCoefficients luke_coefficients(double a, double b, double c, double r2, double a1) {
  const double k = 2.0 * a * b * (c + 1.0) / (c * (a + 1.0) * (b + 1.0));
  return {1.0 - k, 2.0 * (c + 1.0) * k, (a + 1.0) * (b + 1.0) * r2 + 2.0 * (c + 1.0) * a1};
}

double checked_u(const SequenceSpec& seq, double lambda, double eta, double r, const QuadPolicy& policy) {
  const EvalResult u = u_integral(seq, lambda, eta, r, policy);
  if (!u.converged) throw ConvergenceError("bound_mathieu_rhs: U integral did not converge");
  return u.value;
}

double checked_2f1(double a, double b, double c, double z, const QuadPolicy& policy) {
  const EvalResult f = gauss_2f1(HyperTriple{a, b, c}, z, policy);
  if (!f.converged) throw ConvergenceError("bound_mathieu_alt_rhs: 2F1 did not converge");
  return f.value;
}

}  // namespace

double bound_mathieu_rhs(const MathieuParams& params, const QuadPolicy& policy) {
  params.validate_for_bounds();
  const double lambda = params.lambda;
  const double eta = params.eta;
  const double r2 = params.r * params.r;
  const double a1 = params.seq.a1();
  const double e = envelope_factor(params.pq);
  const auto shifted = luke_coefficients(lambda + 1.0, params.b, params.c, r2, a1);
  const auto plain = luke_coefficients(lambda, params.b, params.c, r2, a1);
  const auto u = [&](double l, double h) { return checked_u(params.seq, l, h, params.r, policy); };

  return lambda * e * (shifted.outer * u(lambda + 1.0, eta) + shifted.inner * u(lambda, eta) / shifted.denom) +
         eta * e * (plain.outer * u(lambda, eta + 1.0) + plain.inner * u(lambda - 1.0, eta + 1.0) / plain.denom);
}

double bound_mathieu_alt_rhs(const MathieuParams& params, const QuadPolicy& policy) {
  params.validate_for_bounds();
  const double lambda = params.lambda;
  const double eta = params.eta;
  if (!(lambda + eta > 1.0)) throw DomainError("bound_mathieu_alt_rhs: requires lambda + eta > 1");
  const double r2 = params.r * params.r;
  const double a1 = params.seq.a1();
  const double z = -r2 / a1;
  const double e = envelope_factor(params.pq);
  const double sum = lambda + eta;
  const auto shifted = luke_coefficients(lambda + 1.0, params.b, params.c, r2, a1);
  const auto plain = luke_coefficients(lambda, params.b, params.c, r2, a1);
  const double lead = std::pow(a1, sum);
  const double tail = std::pow(a1, 1.0 - sum);

  const double first =
      shifted.outer * checked_2f1(eta, sum, eta + 1.0, z, policy) / (sum * lead) +
      shifted.inner * tail * checked_2f1(eta, sum - 1.0, eta + 1.0, z, policy) / ((sum - 1.0) * shifted.denom);
  const double second =
      plain.outer * checked_2f1(eta + 1.0, sum, eta + 2.0, z, policy) / (sum * lead) +
      plain.inner * tail * checked_2f1(eta + 1.0, sum - 1.0, eta + 2.0, z, policy) / ((sum - 1.0) * plain.denom);
  return lambda * e * first + eta * e * second;
}

}  // namespace pqm
