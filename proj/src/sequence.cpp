#include "pqm/sequence.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "pqm/errors.hpp"

namespace pqm {

SequenceSpec::SequenceSpec(std::function<double(double)> forward, std::function<double(double)> inverse,
                           std::optional<PowerLaw> law, std::string label)
    : forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      power_law_(law),
      label_(std::move(label)),
      a1_(forward_(1.0)) {}

SequenceSpec SequenceSpec::power(double scale, double exponent) {
  if (!(scale > 0.0) || !(exponent > 0.0) || !std::isfinite(scale) || !std::isfinite(exponent)) {
    throw DomainError("SequenceSpec::power: requires scale > 0 and exponent > 0");
  }
  auto forward = [scale, exponent](double x) {
    return exponent == 1.0 ? scale * x : scale * std::pow(x, exponent);
  };
  auto inverse = [scale, exponent](double y) {
    return exponent == 1.0 ? y / scale : std::pow(y / scale, 1.0 / exponent);
  };
  std::ostringstream label;
  label.precision(17);
  if (scale != 1.0) label << scale << '*';
  label << 'n';
  if (exponent != 1.0) label << '^' << exponent;
  return SequenceSpec(forward, inverse, PowerLaw{scale, exponent}, label.str());
}

SequenceSpec SequenceSpec::custom(std::function<double(double)> forward,
                                  std::function<double(double)> inverse, std::string label) {
  if (!forward || !inverse) throw DomainError("SequenceSpec::custom: both maps are required");
  return SequenceSpec(std::move(forward), std::move(inverse), std::nullopt, std::move(label));
}

std::int64_t counting_value(const SequenceSpec& seq, double x) {
  if (std::isnan(x)) throw DomainError("counting_value: x is NaN");
  if (x < seq.a1()) return 0;
  const double guess = std::floor(seq.inverse(x));
  if (!(guess < 9.0e15)) throw DomainError("counting_value: x beyond the representable index range");
  auto n = static_cast<std::int64_t>(std::max(guess, 1.0));
  // The inverse is only accurate to rounding; settle on a_n <= x < a_{n+1}.
  while (n > 1 && seq.term(n) > x) --n;
  while (seq.term(n + 1) <= x) ++n;
  return n;
}

int alternating_counting_value(const SequenceSpec& seq, double x) {
  return static_cast<int>(counting_value(seq, x) & 1);
}

}  // namespace pqm
