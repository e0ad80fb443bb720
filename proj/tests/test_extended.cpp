#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pqm/extended.hpp"
#include "pqm/verify.hpp"

using namespace pqm;

namespace {

// Frozen by tests/oracles/compute_oracles.py (mpmath at 40 digits; midpoint and series cross-checks).
constexpr double kBetaOneOneHalfHalf = 0.066543060422497135778;  // B(1,1;1/2,1/2)
constexpr double kKummerPq01 = 0.3083466827082625134;            // Phi_{.1,.1}(1;2;-1)
constexpr double kGaussPq025 = 0.17873607271552459926;           // F_{.25,.25}(1,1;2;-1/2)

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("envelope factor") {
  CHECK(envelope_factor({0.0, 0.0}) == 1.0);
  CHECK(rel_err(envelope_factor({1.0, 1.0}), std::exp(-4.0)) < 1e-15);
  CHECK(rel_err(envelope_factor({0.3, 0.3}), std::exp(-1.2)) < 1e-15);
  CHECK(rel_err(envelope_factor({1.0, 4.0}), std::exp(-9.0)) < 1e-15);
}

TEST_CASE("extended_beta reductions and the frozen oracle") {
  CHECK(rel_err(extended_beta(1, 1, {}).value, 1.0) < 1e-13);
  CHECK(rel_err(extended_beta(2, 3, {}).value, 1.0 / 12.0) < 1e-13);
  const auto b = extended_beta(1, 1, {0.5, 0.5});
  CHECK(b.converged);
  CHECK(rel_err(b.value, kBetaOneOneHalfHalf) < 1e-11);
}

TEST_CASE("extended_beta on a grid: reduction, bound, symmetry, monotone damping") {
  const double xs[] = {0.3, 1.0, 2.5, 5.0};
  const double ps[] = {0.0, 0.5, 1.5, 3.0};
  for (double x : xs) {
    for (double y : xs) {
      CHECK(rel_err(extended_beta(x, y, {}).value, beta(x, y)) < 1e-11);
      double previous_p = INFINITY;
      for (double p : ps) {
        const double value = extended_beta(x, y, {p, 0.5}).value;
        CHECK(value <= previous_p);
        previous_p = value;
        for (double q : ps) {
          const PQParams pq{p, q};
          const double v = extended_beta(x, y, pq).value;
          INFO("x=" << x << " y=" << y << " p=" << p << " q=" << q);
          CHECK(v <= envelope_factor(pq) * beta(x, y) + 1e-12);
          CHECK(std::fabs(v - extended_beta(y, x, {q, p}).value) <= 1e-12 * v + 1e-300);
        }
      }
    }
  }
}

TEST_CASE("extended_beta outside the classical domain is flagged") {
  const auto r = extended_beta(-0.5, 2.0, {1.0, 0.0});
  CHECK(r.converged);
  CHECK(r.outside_classical_domain);
  CHECK(r.value > 0.0);
  CHECK_FALSE(extended_beta(0.5, 2.0, {1.0, 0.0}).outside_classical_domain);
  CHECK_THROWS_AS(extended_beta(-0.5, 2.0, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(extended_beta(1.0, 1.0, {-0.1, 0.0}), DomainError);
}

TEST_CASE("extended Gauss: reductions, z = 0 and the cross-pinned oracle") {
  const HyperTriple t{1, 1, 2};
  CHECK(rel_err(extended_gauss_integral(t, -1.0, {}).value, std::log(2.0)) < 1e-12);
  CHECK(rel_err(extended_gauss_integral({0.7, 0.4, 1.9}, 0.6, {}).value, gauss_2f1({0.7, 0.4, 1.9}, 0.6).value) <
        1e-10);
  const double z0 = kBetaOneOneHalfHalf / beta(1, 1);
  CHECK(rel_err(extended_gauss_integral({2.7, 1, 2}, 0.0, {0.5, 0.5}).value, z0) < 1e-11);
  CHECK(rel_err(extended_gauss_series({2.7, 1, 2}, 0.0, {0.5, 0.5}, 50).value, z0) < 1e-11);

  const auto integral = extended_gauss_integral(t, -0.5, {0.25, 0.25});
  const auto series = extended_gauss_series(t, -0.5, {0.25, 0.25}, 200);
  CHECK(integral.converged);
  CHECK(series.converged);
  CHECK(rel_err(integral.value, kGaussPq025) < 1e-11);
  CHECK(rel_err(series.value, kGaussPq025) < 1e-8);
  CHECK(rel_err(extended_gauss_series(t, -0.5, {}, 500).value, gauss_2f1(t, -0.5).value) < 1e-10);
}

TEST_CASE("extended Gauss domain errors") {
  CHECK_THROWS_AS(extended_gauss_integral({1, 1, 2}, 1.0, {}), DomainError);
  CHECK_THROWS_AS(extended_gauss_integral({1, 2, 2}, 0.5, {}), DomainError);
  CHECK_THROWS_AS(extended_gauss_series({1, 1, 2}, -1.0, {}, 100), DomainError);
  CHECK_THROWS_AS(extended_gauss_series({1, 1, 2}, 1.0, {}, 100), DomainError);
  CHECK_THROWS_AS(extended_gauss_integral({1, 1, 2}, 0.5, {0.0, -1.0}), DomainError);
}

TEST_CASE("extended Gauss series reports an exhausted budget") {
  const auto r = extended_gauss_series({1, 1, 2}, 0.95, {0.1, 0.1}, 5);
  CHECK_FALSE(r.converged);
}

TEST_CASE("extended Kummer: reductions, z = 0 and the self-oracle") {
  CHECK(rel_err(extended_kummer(1, 2, 1.0, {}).value, std::exp(1.0) - 1.0) < 1e-12);
  CHECK(rel_err(extended_kummer_integral(0.5, 1.5, -2.0, {}).value, kummer_1f1(0.5, 1.5, -2.0).value) < 1e-10);
  const double z0 = kBetaOneOneHalfHalf / beta(1, 1);
  CHECK(rel_err(extended_kummer(1, 2, 0.0, {0.5, 0.5}).value, z0) < 1e-11);

  const auto series = extended_kummer_series(1, 2, -1.0, {0.1, 0.1}, 200);
  const auto integral = extended_kummer_integral(1, 2, -1.0, {0.1, 0.1});
  CHECK(rel_err(series.value, kKummerPq01) < 1e-11);
  CHECK(rel_err(integral.value, kKummerPq01) < 1e-11);
  CHECK(rel_err(extended_kummer(1, 2, -1.0, {0.1, 0.1}).value, kKummerPq01) < 1e-11);
}

TEST_CASE("extended Kummer dispatch below the series floor uses the integral") {
  const PQParams pq{0.2, 0.3};
  const double z = kKummerSeriesFloor - 8.0;
  CHECK(extended_kummer(0.6, 1.7, z, pq).value == extended_kummer_integral(0.6, 1.7, z, pq).value);
  CHECK(rel_err(extended_kummer(0.6, 1.7, -12.0, {}).value, kummer_1f1(0.6, 1.7, -12.0).value) < 1e-9);
}

TEST_CASE("gauss_bound_rhs closed forms and the envelope inequality") {
  CHECK(rel_err(gauss_bound_rhs({1, 1, 2}, -0.5, {}), gauss_2f1({1, 1, 2}, 0.5).value) < 1e-14);
  CHECK(rel_err(gauss_bound_rhs({1, 1, 2}, -0.5, {1, 1}), std::exp(-4.0) * 2.0 * std::log(2.0)) < 1e-12);
  const HyperTriple t{1, 0.5, 1.5};
  const PQParams pq{0.3, 0.7};
  CHECK(extended_gauss_integral(t, -0.9, pq).value <= gauss_bound_rhs(t, -0.9, pq) + 1e-10);
}

TEST_CASE("two-path agreement on random points") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    const double a = 0.2 + 2.0 * unit(rng);
    const double b = 0.2 + 1.5 * unit(rng);
    const double c = b + 0.3 + 1.5 * unit(rng);
    const double z = -0.9 + 1.8 * unit(rng);
    const PQParams pq{unit(rng), unit(rng)};
    const HyperTriple t{a, b, c};
    const auto series = extended_gauss_series(t, z, pq, 5000);
    const auto integral = extended_gauss_integral(t, z, pq);
    INFO("a=" << a << " b=" << b << " c=" << c << " z=" << z << " p=" << pq.p << " q=" << pq.q);
    CHECK(rel_err(series.value, integral.value) < 1e-8);
    CHECK(std::fabs(integral.value) <= gauss_bound_rhs(t, z, pq) + 1e-10);
  }
}

TEST_CASE("Laplace identity suite") {
  const auto suite = verify::laplace();
  CHECK(suite.size() == 10);
  for (const auto& c : suite) {
    INFO(c.check << " at " << c.point);
    CHECK(c.pass);
  }
}
