#include "pqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <random>
#include <utility>

#include "pqm/classical.hpp"
#include "pqm/errors.hpp"
#include "pqm/extended.hpp"
#include "pqm/mathieu.hpp"
#include "pqm/sequence.hpp"

namespace pqm::verify {

namespace {

using Binding = std::initializer_list<std::pair<const char*, double>>;

std::string describe(Binding binding, const std::string& extra = {}) {
  std::string out;
  char buf[64];
  for (const auto& [name, value] : binding) {
    std::snprintf(buf, sizeof buf, "%s=%.17g", name, value);
    if (!out.empty()) out += ' ';
    out += buf;
  }
  if (!extra.empty()) out += (out.empty() ? "" : " ") + extra;
  return out;
}

CheckRecord close_to(std::string suite, std::string check, std::string point, double lhs, double rhs,
                     double rel_tol) {
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  const double margin = rel_tol * scale - std::fabs(lhs - rhs);
  return {std::move(suite), std::move(check), std::move(point), lhs, rhs, margin, margin >= 0.0};
}

CheckRecord at_most(std::string suite, std::string check, std::string point, double lhs, double rhs,
                    double slack) {
  const double margin = rhs + slack - lhs;
  return {std::move(suite), std::move(check), std::move(point), lhs, rhs, margin, margin >= 0.0};
}

// Runs one check; an exception becomes a failed record carrying the message.
void attempt(Suite& out, const char* suite, const char* check, const std::string& point,
             const std::function<CheckRecord()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    const double nan = std::nan("");
    out.push_back({suite, check, point + " error=\"" + e.what() + "\"", nan, nan, nan, false});
  }
}

double value_of(const EvalResult& r) {
  if (!r.converged) throw ConvergenceError("evaluation did not converge");
  return r.value;
}

double value_of(const SeriesResult& r) {
  if (!r.converged) throw ConvergenceError("series did not converge");
  return r.value;
}

MathieuParams mathieu_point(double lambda, double eta, double b, double c, double pq, const SequenceSpec& seq) {
  MathieuParams m;
  m.lambda = lambda;
  m.eta = eta;
  m.b = b;
  m.c = c;
  m.pq = PQParams{pq, pq};
  m.seq = seq;
  m.r = std::sqrt(seq.a1() / 2.0);
  return m;
}

std::string describe(const MathieuParams& m) {
  return describe({{"lambda", m.lambda}, {"eta", m.eta}, {"b", m.b}, {"c", m.c}, {"p", m.pq.p},
                   {"q", m.pq.q}, {"r", m.r}},
                  "seq=" + m.seq.label());
}

struct GaussPoint {
  HyperTriple t;
  double z;
  PQParams pq;
};

// Shared by the two-path and the envelope-bound checks.
std::vector<GaussPoint> gauss_grid() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> a(0.2, 2.0);
  std::uniform_real_distribution<double> b(0.2, 2.0);
  std::uniform_real_distribution<double> gap(0.2, 2.0);
  std::uniform_real_distribution<double> z(-0.9, 0.9);
  std::uniform_real_distribution<double> pq(0.0, 1.0);
  std::vector<GaussPoint> grid;
  for (int i = 0; i < 50; ++i) {
    GaussPoint g;
    g.t.a = a(rng);
    g.t.b = b(rng);
    g.t.c = g.t.b + gap(rng);
    g.z = z(rng);
    g.pq.p = pq(rng);
    g.pq.q = pq(rng);
    grid.push_back(g);
  }
  return grid;
}

std::string describe(const GaussPoint& g) {
  return describe({{"a", g.t.a}, {"b", g.t.b}, {"c", g.t.c}, {"z", g.z}, {"p", g.pq.p}, {"q", g.pq.q}});
}

constexpr double kReductionTol = 1e-9;
constexpr double kTwoPathTol = 1e-8;
constexpr double kTheorem1Tol = 1e-6;
constexpr double kLaplaceTol = 1e-7;
constexpr double kLukeSlack = 1e-12;
constexpr double kBoundSlack = 1e-9;
constexpr double kGoldenTol = 1e-10;
constexpr double kClosedTailTol = 1e-10;

}  // namespace

Suite reductions(const QuadPolicy& policy) {
  const char* suite = "reductions";
  Suite out;
  const PQParams classical{};

  for (double x : {0.3, 1.0, 2.5, 4.7}) {
    for (double y : {0.3, 1.0, 2.5, 4.7}) {
      const auto point = describe({{"x", x}, {"y", y}});
      attempt(out, suite, "extended_beta", point, [&] {
        return close_to(suite, "extended_beta", point, value_of(extended_beta(x, y, classical, policy)),
                        beta(x, y), kReductionTol);
      });
    }
  }

  for (double a : {0.5, 2.0}) {
    for (auto [b, c] : {std::pair{0.5, 1.5}, std::pair{1.0, 2.5}}) {
      for (double z : {-0.9, -0.3, 0.4, 0.8}) {
        const HyperTriple t{a, b, c};
        const auto point = describe({{"a", a}, {"b", b}, {"c", c}, {"z", z}});
        attempt(out, suite, "extended_gauss_integral", point, [&] {
          return close_to(suite, "extended_gauss_integral", point,
                          value_of(extended_gauss_integral(t, z, classical, policy)),
                          value_of(gauss_2f1(t, z, policy)), kReductionTol);
        });
      }
    }
  }

  for (double z : {-0.6, 0.6}) {
    for (double a : {0.5, 1.5}) {
      const HyperTriple t{a, 0.75, 2.0};
      const auto point = describe({{"a", a}, {"b", 0.75}, {"c", 2.0}, {"z", z}});
      attempt(out, suite, "extended_gauss_series", point, [&] {
        return close_to(suite, "extended_gauss_series", point,
                        value_of(extended_gauss_series(t, z, classical, 10000, policy)),
                        value_of(gauss_2f1(t, z, policy)), kReductionTol);
      });
    }
  }

  for (auto [b, c] : {std::pair{0.5, 1.5}, std::pair{1.0, 2.0}, std::pair{2.0, 3.5}}) {
    for (double z : {-5.0, -1.0, 1.0, 4.0}) {
      const auto point = describe({{"b", b}, {"c", c}, {"z", z}});
      attempt(out, suite, "extended_kummer", point, [&] {
        return close_to(suite, "extended_kummer", point, value_of(extended_kummer(b, c, z, classical, policy)),
                        value_of(kummer_1f1(b, c, z, policy)), kReductionTol);
      });
    }
  }

  const SequenceSpec linear = SequenceSpec::power(1.0, 1.0);
  const SequenceSpec square = SequenceSpec::power(1.0, 2.0);
  const MathieuParams series[] = {mathieu_point(1.0, 1.0, 0.75, 2.0, 0.0, linear),
                                  mathieu_point(0.5, 2.0, 0.75, 2.0, 0.0, linear),
                                  mathieu_point(2.0, 0.5, 0.75, 2.0, 0.0, square),
                                  mathieu_point(1.0, 1.0, 0.75, 2.0, 0.0, square)};
  for (const auto& m : series) {
    const auto point = describe(m);
    attempt(out, suite, "mathieu_direct", point, [&] {
      return close_to(suite, "mathieu_direct", point,
                      value_of(mathieu_direct(m, policy, KernelKind::extended)),
                      value_of(mathieu_direct(m, policy, KernelKind::classical)), kReductionTol);
    });
    attempt(out, suite, "mathieu_alternating_direct", point, [&] {
      return close_to(suite, "mathieu_alternating_direct", point,
                      value_of(mathieu_alternating_direct(m, policy, KernelKind::extended)),
                      value_of(mathieu_alternating_direct(m, policy, KernelKind::classical)), kReductionTol);
    });
  }
  return out;
}

Suite two_path(const QuadPolicy& policy) {
  const char* suite = "two-path";
  Suite out;
  for (const auto& g : gauss_grid()) {
    const auto point = describe(g);
    attempt(out, suite, "gauss_series_vs_integral", point, [&] {
      return close_to(suite, "gauss_series_vs_integral", point,
                      value_of(extended_gauss_series(g.t, g.z, g.pq, 10000, policy)),
                      value_of(extended_gauss_integral(g.t, g.z, g.pq, policy)), kTwoPathTol);
    });
  }
  return out;
}

Suite theorem1(const QuadPolicy& policy) {
  const char* suite = "theorem1";
  Suite out;
  const SequenceSpec sequences[] = {SequenceSpec::power(1.0, 1.0), SequenceSpec::power(1.0, 2.0)};
  for (const auto& seq : sequences) {
    for (double pq : {0.0, 0.5}) {
      for (auto [lambda, eta] : {std::pair{0.5, 2.0}, std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        const MathieuParams m = mathieu_point(lambda, eta, 0.75, 2.0, pq, seq);
        const auto point = describe(m);
        attempt(out, suite, "direct_vs_integral", point, [&] {
          return close_to(suite, "direct_vs_integral", point, value_of(mathieu_direct(m, policy)),
                          value_of(mathieu_via_theorem1(m, policy)), kTheorem1Tol);
        });
        attempt(out, suite, "alternating_direct_vs_integral", point, [&] {
          return close_to(suite, "alternating_direct_vs_integral", point,
                          value_of(mathieu_alternating_direct(m, policy)),
                          value_of(mathieu_alt_via_theorem1(m, policy)), kTheorem1Tol);
        });
      }
    }
  }
  return out;
}

Suite laplace(const QuadPolicy& policy) {
  const char* suite = "laplace";
  Suite out;
  std::mt19937_64 rng(7041);
  std::uniform_real_distribution<double> lambda_d(0.5, 2.5);
  std::uniform_real_distribution<double> b_d(0.2, 1.5);
  std::uniform_real_distribution<double> gap_d(0.3, 1.5);
  std::uniform_real_distribution<double> z_d(0.5, 4.0);
  std::uniform_real_distribution<double> frac_d(0.1, 0.9);
  std::uniform_real_distribution<double> pq_d(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double lambda = lambda_d(rng);
    const double b = b_d(rng);
    const double c = b + gap_d(rng);
    const double z = z_d(rng);
    const double r2 = frac_d(rng) * z;
    const PQParams pq{pq_d(rng), pq_d(rng)};
    const auto point = describe({{"lambda", lambda}, {"b", b}, {"c", c}, {"z", z}, {"r2", r2},
                                 {"p", pq.p}, {"q", pq.q}});
    attempt(out, suite, "laplace_kernel", point, [&] {
      const double lhs = value_of(extended_gauss_integral(HyperTriple{lambda, b, c}, -r2 / z, pq, policy));
      const double log_norm = lambda * std::log(z) - log_gamma(lambda);
      const auto integrand = [&](double t, double dist_lo, double) {
        const double log_weight = -z * t + (lambda - 1.0) * std::log(dist_lo) + log_norm;
        if (log_weight < -745.0) return 0.0;
        return std::exp(log_weight) * value_of(extended_kummer(b, c, -r2 * t, pq, policy));
      };
      const IntegrationResult rhs = integrate_to_infinity(integrand, 0.0, policy);
      if (!rhs.converged) throw ConvergenceError("Laplace integral did not converge");
      return close_to(suite, "laplace_kernel", point, lhs, rhs.value, kLaplaceTol);
    });
  }
  return out;
}

Suite bounds(const QuadPolicy& policy) {
  const char* suite = "bounds";
  Suite out;

  for (double x : {0.5, 1.0, 2.5, 5.0}) {
    for (double y : {0.5, 1.0, 2.5, 5.0}) {
      for (double p : {0.0, 0.5, 3.0}) {
        for (double q : {0.0, 0.5, 3.0}) {
          const PQParams pq{p, q};
          const auto point = describe({{"x", x}, {"y", y}, {"p", p}, {"q", q}});
          attempt(out, suite, "beta_bound", point, [&] {
            return at_most(suite, "beta_bound", point, value_of(extended_beta(x, y, pq, policy)),
                           envelope_factor(pq) * beta(x, y), 1e-12);
          });
        }
      }
    }
  }

  for (const auto& g : gauss_grid()) {
    const auto point = describe(g);
    attempt(out, suite, "gauss_envelope", point, [&] {
      return at_most(suite, "gauss_envelope", point,
                     std::fabs(value_of(extended_gauss_integral(g.t, g.z, g.pq, policy))),
                     gauss_bound_rhs(g.t, g.z, g.pq, policy), 1e-10);
    });
  }

  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> a_d(0.05, 3.0);
  std::uniform_real_distribution<double> b_d(0.05, 1.0);
  std::uniform_real_distribution<double> gap_d(0.0, 3.0);
  std::uniform_real_distribution<double> z_d(1e-3, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double a = a_d(rng);
    const double b = b_d(rng);
    const double c = a + gap_d(rng);
    const double z = z_d(rng);
    const HyperTriple t{a, b, c};
    const auto point = describe({{"a", a}, {"b", b}, {"c", c}, {"z", z}});
    attempt(out, suite, "luke", point, [&] {
      return at_most(suite, "luke", point, value_of(gauss_2f1(t, -z, policy)), luke_bound_rhs(t, z),
                     kLukeSlack);
    });
  }

  const SequenceSpec sequences[] = {SequenceSpec::power(1.0, 1.0), SequenceSpec::power(1.0, 2.0)};
  for (const auto& seq : sequences) {
    for (double lambda : {0.5, 1.0}) {
      for (double b : {0.5, 1.0}) {
        for (double pq : {0.0, 0.5}) {
          for (double eta : {2.0, 3.0}) {
            const MathieuParams m = mathieu_point(lambda, eta, b, 2.0, pq, seq);
            const auto point = describe(m);
            attempt(out, suite, "mathieu_bound", point, [&] {
              return at_most(suite, "mathieu_bound", point, value_of(mathieu_direct(m, policy)),
                             bound_mathieu_rhs(m, policy), kBoundSlack);
            });
          }
          for (double eta : {1.0, 2.5}) {
            const MathieuParams m = mathieu_point(lambda, eta, b, 2.0, pq / 2.0, seq);
            const auto point = describe(m);
            attempt(out, suite, "mathieu_alt_bound", point, [&] {
              return at_most(suite, "mathieu_alt_bound", point, value_of(mathieu_alternating_direct(m, policy)),
                             bound_mathieu_alt_rhs(m, policy), kBoundSlack);
            });
          }
        }
      }
    }
  }
  return out;
}

Suite quadrature_golden(const QuadPolicy& policy) {
  const char* suite = "quadrature-golden";
  Suite out;
  const double pi = std::numbers::pi;
  const auto golden = [&](const char* name, const IntegrationResult& r, double truth) {
    const double diff = std::fabs(r.value - truth);
    const double margin = std::min(5.0 * r.abs_err_est - diff, kGoldenTol * std::fabs(truth) - diff);
    char point[64];
    std::snprintf(point, sizeof point, "abs_err_est=%.3g n_evals=%zu", r.abs_err_est, r.n_evals);
    return CheckRecord{suite, name, point, r.value, truth, margin, r.converged && margin >= 0.0};
  };
  const auto finite = [&](const char* name, auto f, double lo, double hi, double truth) {
    attempt(out, suite, name, "", [&] { return golden(name, integrate_finite(f, lo, hi, policy), truth); });
  };
  const auto infinite = [&](const char* name, auto f, double lo, double truth) {
    attempt(out, suite, name, "", [&] { return golden(name, integrate_to_infinity(f, lo, policy), truth); });
  };

  finite("constant", [](double) { return 1.0; }, 0.0, 1.0, 1.0);
  finite("inverse_sqrt", [](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 2.0);
  finite("log", [](double t) { return std::log(t); }, 0.0, 1.0, -1.0);
  finite("right_power", [](double, double, double v) { return std::pow(v, -0.75); }, 0.0, 1.0, 4.0);
  finite("arcsine", [](double, double u, double v) { return 1.0 / std::sqrt(u * v); }, 0.0, 1.0, pi);
  finite("flat_bump", [](double, double u, double v) { return std::exp(-1.0 / u - 1.0 / v); }, 0.0, 1.0,
         0.0070298584066096562392);
  infinite("inverse_square", [](double x) { return 1.0 / (x * x); }, 1.0, 1.0);
  infinite("exponential", [](double x) { return std::exp(-x); }, 0.0, 1.0);
  infinite("partial_fractions", [](double x) { return 1.0 / (x * (x + 1.0) * (x + 1.0)); }, 1.0,
           0.19314718055994530942);
  infinite("cauchy", [](double x) { return 1.0 / (1.0 + x * x); }, 0.0, pi / 2.0);
  return out;
}

Suite counting(const QuadPolicy&) {
  const char* suite = "counting";
  Suite out;
  const SequenceSpec families[] = {
      SequenceSpec::power(1.0, 1.0), SequenceSpec::power(1.0, 2.0), SequenceSpec::power(2.0, 1.0),
      SequenceSpec::power(0.5, 1.5),
      SequenceSpec::custom([](double x) { return x * x * x + x; },
                           [](double y) {
                             // Real root of x^3 + x - y by Newton from cbrt(y).
                             double x = std::cbrt(y);
                             for (int i = 0; i < 60; ++i) x -= (x * x * x + x - y) / (3.0 * x * x + 1.0);
                             return x;
                           },
                           "n^3+n")};
  std::mt19937_64 rng(1234567);
  for (const auto& seq : families) {
    constexpr std::int64_t kTop = 2000;
    std::uniform_real_distribution<double> x_d(seq.a1(), seq.term(kTop));
    std::uniform_int_distribution<std::int64_t> n_d(1, kTop - 1);
    constexpr int kSamples = 1000;
    int mismatches = 0;
    int parity_mismatches = 0;
    for (int i = 0; i < kSamples; ++i) {
      double x = 0.0;
      switch (i % 3) {
        case 0:
          x = x_d(rng);
          break;
        case 1:
          x = seq.term(n_d(rng));  // exactly on a jump
          break;
        default:
          x = std::nextafter(seq.term(n_d(rng)), 0.0);  // just below a jump
          break;
      }
      std::int64_t brute = 0;
      while (seq.term(brute + 1) <= x) ++brute;
      mismatches += counting_value(seq, x) != brute;
      parity_mismatches += alternating_counting_value(seq, x) != static_cast<int>(brute % 2);
    }
    const auto point = describe({{"samples", kSamples}}, "seq=" + seq.label());
    out.push_back({suite, "counting_value", point, static_cast<double>(mismatches), 0.0,
                   -static_cast<double>(mismatches), mismatches == 0});
    out.push_back({suite, "alternating_counting_value", point, static_cast<double>(parity_mismatches), 0.0,
                   -static_cast<double>(parity_mismatches), parity_mismatches == 0});
  }
  return out;
}

Suite closed_tail(const QuadPolicy& policy) {
  const char* suite = "closed-tail";
  Suite out;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> lambda_d(0.0, 2.0);
  std::uniform_real_distribution<double> eta_d(0.0, 2.0);
  std::uniform_real_distribution<double> a1_d(0.5, 3.0);
  std::uniform_real_distribution<double> frac_d(0.0, 0.95);
  for (int i = 0; i < 10;) {
    const double lambda = lambda_d(rng);
    const double eta = eta_d(rng);
    const double a1 = a1_d(rng);
    const double r = std::sqrt(frac_d(rng) * a1);
    if (lambda + eta < 1.3) continue;  // keep the quadrature's far tail negligible
    ++i;
    const auto point = describe({{"a1", a1}, {"lambda", lambda}, {"eta", eta}, {"r", r}});
    attempt(out, suite, "closed_tail_2f1", point, [&] {
      const auto direct = integrate_to_infinity(
          [&](double x) { return std::pow(x, -lambda) * std::pow(x + r * r, -eta); }, a1, policy);
      if (!direct.converged) throw ConvergenceError("tail quadrature did not converge");
      return close_to(suite, "closed_tail_2f1", point, closed_tail_2f1(a1, lambda, eta, r, policy), direct.value,
                      kClosedTailTol);
    });
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reductions", "two-path", "theorem1", "laplace",
                                                 "bounds",     "quadrature-golden", "counting", "closed-tail"};
  return names;
}

Suite run(const std::string& name, const QuadPolicy& policy) {
  using Runner = Suite (*)(const QuadPolicy&);
  static const std::pair<const char*, Runner> runners[] = {
      {"reductions", reductions}, {"two-path", two_path},  {"theorem1", theorem1},
      {"laplace", laplace},       {"bounds", bounds},      {"quadrature-golden", quadrature_golden},
      {"counting", counting},     {"closed-tail", closed_tail}};
  if (name == "all") {
    Suite all;
    for (const auto& [n, runner] : runners) {
      Suite part = runner(policy);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  for (const auto& [n, runner] : runners) {
    if (name == n) return runner(policy);
  }
  throw ParameterError("unknown verification suite '" + name + "'");
}

bool all_pass(const Suite& suite) {
  return std::all_of(suite.begin(), suite.end(), [](const CheckRecord& r) { return r.pass; });
}

}  // namespace pqm::verify
