#include <cmath>
#include <regex>
#include <string>
#include <utility>

#include "pqm/classical.hpp"
#include "pqm/errors.hpp"
#include "pqm/extended.hpp"
#include "pqm/mathieu.hpp"
#include "run_config.hpp"

namespace pqm::cli {

namespace {

constexpr std::pair<const char*, Target> kTargets[] = {
    {"beta", Target::beta},         {"gauss", Target::gauss},
    {"kummer", Target::kummer},     {"mathieu", Target::mathieu},
    {"mathieu-alt", Target::mathieu_alt}, {"u-integral", Target::u_integral},
    {"bound", Target::bound},       {"bound-alt", Target::bound_alt}};

constexpr std::size_t kSeriesTerms = 10000;

double require(const RunConfig& config, const std::string& name) {
  const auto it = config.params.find(name);
  if (it == config.params.end()) {
    throw ParameterError(std::string("target ") + to_string(config.target) + " requires --" + name);
  }
  if (!std::isfinite(it->second)) throw DomainError("--" + name + " must be finite");
  return it->second;
}

double optional(const RunConfig& config, const std::string& name, double fallback) {
  return config.params.count(name) ? require(config, name) : fallback;
}

PQParams pq_of(const RunConfig& config) {
  PQParams pq{optional(config, "p", 0.0), optional(config, "q", 0.0)};
  pq.validate();
  return pq;
}

MathieuParams mathieu_of(const RunConfig& config) {
  MathieuParams m;
  m.lambda = require(config, "lambda");
  m.eta = require(config, "eta");
  m.b = require(config, "b");
  m.c = require(config, "c");
  m.r = require(config, "r");
  m.pq = pq_of(config);
  m.seq = build_sequence(config);
  return m;
}

double power_exponent(const SequenceSpec& seq) { return seq.power_law() ? seq.power_law()->exponent : 1.0; }

std::vector<Field> fields(const RunConfig& config, std::initializer_list<const char*> names,
                          const SequenceSpec* seq = nullptr) {
  std::vector<Field> out;
  for (const char* name : names) out.push_back({name, optional(config, name, 0.0), {}});
  if (seq) out.push_back({"seq", 0.0, seq->label()});
  return out;
}

Record from_eval(const RunConfig& config, const char* method, std::vector<Field> params, const EvalResult& r) {
  return {to_string(config.target), method, std::move(params), r.value, r.err_est, r.n_work, r.converged};
}

Record from_series(const RunConfig& config, std::vector<Field> params, const SeriesResult& r) {
  return {to_string(config.target), to_string(r.method), std::move(params), r.value, r.err_est, r.n_work,
          r.converged};
}

bool wants_direct(Method m) { return m == Method::direct || m == Method::both; }
bool wants_integral(Method m) { return m == Method::integral || m == Method::both; }

void reject_direct(const RunConfig& config) {
  if (config.method == Method::direct) {
    throw ParameterError(std::string("target ") + to_string(config.target) + " has no direct method");
  }
}

}  // namespace

Target parse_target(const std::string& name) {
  for (const auto& [n, t] : kTargets) {
    if (name == n) return t;
  }
  throw ParameterError("unknown target '" + name + "'");
}

const char* to_string(Target t) {
  for (const auto& [n, target] : kTargets) {
    if (t == target) return n;
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::automatic;
  if (name == "direct") return Method::direct;
  if (name == "integral") return Method::integral;
  if (name == "both") return Method::both;
  throw ParameterError("unknown method '" + name + "' (expected auto, direct, integral or both)");
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "plain") return Format::plain;
  throw ParameterError("unknown format '" + name + "' (expected csv, json or plain)");
}

const std::vector<std::string>& numeric_flags() {
  static const std::vector<std::string> names = {"x", "y",      "a",   "b", "c", "z",    "p",
                                                 "q", "lambda", "eta", "r", "k", "scale"};
  return names;
}

SequenceSpec build_sequence(const RunConfig& config) {
  const std::string& s = config.seq;
  if (s == "n") return SequenceSpec::power(1.0, 1.0);
  if (s == "n^k") return SequenceSpec::power(1.0, require(config, "k"));
  if (s == "c*n^k") return SequenceSpec::power(require(config, "scale"), require(config, "k"));
  static const std::regex literal(R"(^(?:([0-9.eE+-]+)\*)?n(?:\^([0-9.eE+-]+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, literal)) {
    try {
      const double scale = m[1].matched ? std::stod(m[1].str()) : 1.0;
      const double k = m[2].matched ? std::stod(m[2].str()) : 1.0;
      return SequenceSpec::power(scale, k);
    } catch (const std::logic_error&) {
      // fall through to the error below
    }
  }
  throw ParameterError("unknown sequence '" + s + "' (expected n, n^k, c*n^k or a literal like 2*n^1.5)");
}

void validate(const RunConfig& config) {
  config.policy.validate();
  switch (config.target) {
    case Target::beta: {
      reject_direct(config);
      const double x = require(config, "x");
      const double y = require(config, "y");
      const PQParams pq = pq_of(config);
      if ((pq.p == 0.0 && !(x > 0.0)) || (pq.q == 0.0 && !(y > 0.0))) {
        throw DomainError("beta: requires x > 0 unless p > 0 and y > 0 unless q > 0");
      }
      return;
    }
    case Target::gauss: {
      const HyperTriple t{require(config, "a"), require(config, "b"), require(config, "c")};
      const double z = require(config, "z");
      pq_of(config);
      t.require_standard_order("gauss");
      if (!(z < 1.0)) throw DomainError("gauss: requires z < 1");
      if (wants_direct(config.method) && !(std::fabs(z) < 1.0)) {
        throw DomainError("gauss: the series method requires |z| < 1");
      }
      return;
    }
    case Target::kummer: {
      const double b = require(config, "b");
      const double c = require(config, "c");
      require(config, "z");
      pq_of(config);
      if (!(c > b && b > 0.0)) throw DomainError("kummer: requires c > b > 0");
      return;
    }
    case Target::mathieu:
    case Target::mathieu_alt: {
      const MathieuParams m = mathieu_of(config);
      m.validate();
      if (config.target == Target::mathieu && !(m.lambda + m.eta > 1.0 / power_exponent(m.seq))) {
        throw DivergenceError("mathieu: series diverges, needs lambda + eta > 1/k");
      }
      return;
    }
    case Target::u_integral: {
      reject_direct(config);
      const double lambda = require(config, "lambda");
      const double eta = require(config, "eta");
      const double r = require(config, "r");
      const SequenceSpec seq = build_sequence(config);
      if (!(r >= 0.0)) throw DomainError("u-integral: requires r >= 0");
      if (!(lambda + eta > 1.0 + 1.0 / power_exponent(seq))) {
        throw DivergenceError("u-integral: integral diverges, needs lambda + eta > 1 + 1/k");
      }
      return;
    }
    case Target::bound:
    case Target::bound_alt: {
      const MathieuParams m = mathieu_of(config);
      m.validate_for_bounds();
      const double k = power_exponent(m.seq);
      if (config.target == Target::bound && !(m.lambda + m.eta > 1.0 + 1.0 / k)) {
        throw DivergenceError("bound: U integrals diverge, needs lambda + eta > 1 + 1/k");
      }
      if (config.target == Target::bound_alt && !(m.lambda + m.eta > 1.0)) {
        throw DomainError("bound-alt: requires lambda + eta > 1");
      }
      return;
    }
  }
}

std::vector<Record> evaluate(const RunConfig& config) {
  validate(config);
  const QuadPolicy& policy = config.policy;
  std::vector<Record> out;
  switch (config.target) {
    case Target::beta: {
      const auto params = fields(config, {"x", "y", "p", "q"});
      out.push_back(from_eval(config, "integral", params,
                              extended_beta(require(config, "x"), require(config, "y"), pq_of(config), policy)));
      break;
    }
    case Target::gauss: {
      const HyperTriple t{require(config, "a"), require(config, "b"), require(config, "c")};
      const double z = require(config, "z");
      const auto params = fields(config, {"a", "b", "c", "z", "p", "q"});
      if (wants_direct(config.method)) {
        out.push_back(
            from_eval(config, "series", params, extended_gauss_series(t, z, pq_of(config), kSeriesTerms, policy)));
      }
      if (config.method == Method::automatic || wants_integral(config.method)) {
        out.push_back(from_eval(config, "integral", params, extended_gauss_integral(t, z, pq_of(config), policy)));
      }
      break;
    }
    case Target::kummer: {
      const double b = require(config, "b");
      const double c = require(config, "c");
      const double z = require(config, "z");
      const auto params = fields(config, {"b", "c", "z", "p", "q"});
      if (config.method == Method::automatic) {
        out.push_back(from_eval(config, z >= kKummerSeriesFloor ? "series" : "integral", params,
                                extended_kummer(b, c, z, pq_of(config), policy)));
        break;
      }
      if (wants_direct(config.method)) {
        out.push_back(
            from_eval(config, "series", params, extended_kummer_series(b, c, z, pq_of(config), kSeriesTerms, policy)));
      }
      if (wants_integral(config.method)) {
        out.push_back(from_eval(config, "integral", params, extended_kummer_integral(b, c, z, pq_of(config), policy)));
      }
      break;
    }
    case Target::mathieu:
    case Target::mathieu_alt: {
      const MathieuParams m = mathieu_of(config);
      const bool alt = config.target == Target::mathieu_alt;
      const auto params = fields(config, {"lambda", "eta", "b", "c", "p", "q", "r"}, &m.seq);
      if (config.method == Method::automatic || wants_direct(config.method)) {
        out.push_back(from_series(config, params, alt ? mathieu_alternating_direct(m, policy) : mathieu_direct(m, policy)));
      }
      if (wants_integral(config.method)) {
        out.push_back(
            from_series(config, params, alt ? mathieu_alt_via_theorem1(m, policy) : mathieu_via_theorem1(m, policy)));
      }
      break;
    }
    case Target::u_integral: {
      const SequenceSpec seq = build_sequence(config);
      const auto params = fields(config, {"lambda", "eta", "r"}, &seq);
      out.push_back(from_eval(config, "integral", params,
                              u_integral(seq, require(config, "lambda"), require(config, "eta"), require(config, "r"),
                                         policy)));
      break;
    }
    case Target::bound:
    case Target::bound_alt: {
      const MathieuParams m = mathieu_of(config);
      const bool alt = config.target == Target::bound_alt;
      const auto params = fields(config, {"lambda", "eta", "b", "c", "p", "q", "r"}, &m.seq);
      if (config.method != Method::direct) {
        const double rhs = alt ? bound_mathieu_alt_rhs(m, policy) : bound_mathieu_rhs(m, policy);
        out.push_back({to_string(config.target), to_string(SeriesMethod::bound_rhs), params, rhs, 0.0, 0, true});
      }
      if (wants_direct(config.method)) {
        out.push_back(from_series(config, params, alt ? mathieu_alternating_direct(m, policy) : mathieu_direct(m, policy)));
      }
      break;
    }
  }
  return out;
}

}  // namespace pqm::cli
