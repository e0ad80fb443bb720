#include "pqm/quadrature.hpp"

#include <array>
#include <numbers>
#include <sstream>
#include <vector>

namespace pqm {

IntegrandError::IntegrandError(double abscissa, double value)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite integrand value " << value << " at x = " << abscissa;
        return os.str();
      }()),
      abscissa_(abscissa),
      value_(value) {}

void QuadPolicy::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw ParameterError("QuadPolicy: rel_tol must be positive and finite");
  }
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) {
    throw ParameterError("QuadPolicy: abs_tol must be non-negative and finite");
  }
  if (max_refinements < 1) throw ParameterError("QuadPolicy: max_refinements must be >= 1");
  if (max_evals < 16) throw ParameterError("QuadPolicy: max_evals must be >= 16");
}

namespace detail {

namespace {

using LevelTable = std::array<std::vector<TanhSinhNode>, kMaxTanhSinhLevel + 1>;

// Node at parameter t >= 0, or false once the offset underflows the normal range.
bool make_node(double t, TanhSinhNode& node) {
  const double u = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * u);  // offset = 1/(1+e^{2u}) = e/(1+e)
  const double offset = e / (1.0 + e);
  if (!(offset >= std::numeric_limits<double>::min())) return false;
  // (1/2) * (pi/2) cosh t / cosh^2 u, with 1/cosh^2 u = 4e/(1+e)^2.
  node.offset = offset;
  node.weight = std::numbers::pi * std::cosh(t) * e / ((1.0 + e) * (1.0 + e));
  return true;
}

LevelTable build_tables() {
  LevelTable tables;
  for (int level = 0; level <= kMaxTanhSinhLevel; ++level) {
    const double h = std::ldexp(1.0, -level);
    auto& nodes = tables[static_cast<std::size_t>(level)];
    for (long k = 0;; ++k) {
      const double t = level == 0 ? static_cast<double>(k) : h * static_cast<double>(2 * k + 1);
      TanhSinhNode node{};
      if (!make_node(t, node)) break;
      nodes.push_back(node);
    }
  }
  return tables;
}

}  // namespace

std::span<const TanhSinhNode> tanh_sinh_level(int level) {
  static const LevelTable tables = build_tables();
  return tables.at(static_cast<std::size_t>(level));
}

void throw_non_finite(double abscissa, double value) { throw IntegrandError(abscissa, value); }

}  // namespace detail

}  // namespace pqm
