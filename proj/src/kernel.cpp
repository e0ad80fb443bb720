#include "kernel.hpp"

#include <cmath>

#include "pqm/classical.hpp"

namespace pqm::detail {

Kernel::Kernel(Kind kind, double b, double c, const PQParams& pq, const QuadPolicy& policy)
    : kind_(kind), b_(b), c_(c), pq_(pq), policy_(policy) {}

Kernel Kernel::for_series(KernelKind kind, const MathieuParams& params, const QuadPolicy& policy) {
  return Kernel(kind == KernelKind::extended ? Kind::extended : Kind::classical, params.b, params.c,
                params.pq, policy);
}

Kernel Kernel::unit(const QuadPolicy& policy) { return Kernel(Kind::unit, 1.0, 2.0, PQParams{}, policy); }

EvalResult Kernel::value(double alpha, double z) const {
  EvalResult r;
  switch (kind_) {
    case Kind::unit:
      return EvalResult{1.0, 0.0, 0, true};
    case Kind::classical:
      r = gauss_2f1(HyperTriple{alpha, b_, c_}, z, policy_);
      break;
    case Kind::extended:
      r = extended_gauss_integral(HyperTriple{alpha, b_, c_}, z, pq_, policy_);
      break;
  }
  work_ += r.n_work;
  converged_ = converged_ && r.converged;
  return r;
}

double Kernel::sup_bound() const {
  return kind_ == Kind::extended ? envelope_factor(pq_) : 1.0;
}

double Kernel::beta_ratio(std::size_t j) const {
  while (ratios_.size() <= j) {
    const std::size_t n = ratios_.size();
    if (kind_ == Kind::extended) {
      const EvalResult eb = extended_beta(b_ + static_cast<double>(n), c_ - b_, pq_, policy_);
      work_ += eb.n_work;
      converged_ = converged_ && eb.converged;
      ratios_.push_back(eb.value / beta(b_, c_ - b_));
    } else {
      // (b)_n / (c)_n
      const double k = static_cast<double>(n);
      ratios_.push_back(n == 0 ? 1.0 : ratios_.back() * (b_ + k - 1.0) / (c_ + k - 1.0));
    }
  }
  return ratios_[j];
}

double Kernel::coefficient(double alpha, std::size_t j) const {
  if (kind_ == Kind::unit) return j == 0 ? 1.0 : 0.0;
  // (alpha)_j / j!
  double rising = 1.0;
  for (std::size_t k = 0; k < j; ++k) {
    rising *= (alpha + static_cast<double>(k)) / static_cast<double>(k + 1);
  }
  return rising * beta_ratio(j);
}

}  // namespace pqm::detail
