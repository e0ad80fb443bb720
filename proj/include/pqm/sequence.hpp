#pragma once

// Monotone sequences a = (a_n), their continuous extension a(x), its inverse
// and the counting function [a^{-1}(x)] = #{n >= 1 : a_n <= x}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace pqm {

class SequenceSpec {
 public:
  // a(x) = scale * x^exponent.
  struct PowerLaw {
    double scale;
    double exponent;
  };

  // Throws DomainError unless scale > 0 and exponent > 0.
  static SequenceSpec power(double scale, double exponent);

  // User-supplied increasing map with its inverse. The pair must satisfy
  // a(x) -> infinity and inverse(a(x)) = x on [1, infinity).
  static SequenceSpec custom(std::function<double(double)> forward,
                             std::function<double(double)> inverse, std::string label);

  double at(double x) const { return forward_(x); }
  double term(std::int64_t n) const { return forward_(static_cast<double>(n)); }
  double inverse(double y) const { return inverse_(y); }
  double a1() const { return a1_; }

  const std::optional<PowerLaw>& power_law() const { return power_law_; }
  const std::string& label() const { return label_; }

 private:
  SequenceSpec(std::function<double(double)> forward, std::function<double(double)> inverse,
               std::optional<PowerLaw> law, std::string label);

  std::function<double(double)> forward_;
  std::function<double(double)> inverse_;
  std::optional<PowerLaw> power_law_;
  std::string label_;
  double a1_;
};

// [a^{-1}(x)]: the number of indices n with a_n <= x (0 when x < a_1).
std::int64_t counting_value(const SequenceSpec& seq, double x);

// Parity of the counting function, i.e. sin^2(pi/2 [a^{-1}(x)]) in {0, 1}.
int alternating_counting_value(const SequenceSpec& seq, double x);

}  // namespace pqm
