#include "pqm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <optional>
#include <sstream>

#include "pqm/errors.hpp"
#include "pqm/verify.hpp"
#include "run_config.hpp"

namespace pqm::cli {

namespace {

struct Sweep {
  std::string name;
  double lo;
  double hi;
  int steps;

  double at(int i) const {
    if (steps == 1) return lo;
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

Sweep parse_sweep(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 4) throw ParameterError("--sweep expects name,lo,hi,steps, got '" + spec + "'");
  const auto& flags = numeric_flags();
  if (parts[0] != "pq" && std::find(flags.begin(), flags.end(), parts[0]) == flags.end()) {
    throw ParameterError("--sweep: '" + parts[0] + "' is not a numeric parameter");
  }
  Sweep s{parts[0], 0.0, 0.0, 0};
  try {
    s.lo = std::stod(parts[1]);
    s.hi = std::stod(parts[2]);
    std::size_t used = 0;
    s.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("steps");
  } catch (const std::logic_error&) {
    throw ParameterError("--sweep: cannot parse numbers in '" + spec + "'");
  }
  if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || s.steps < 1) {
    throw ParameterError("--sweep: needs finite lo, hi and steps >= 1");
  }
  return s;
}

// "pq" sweeps p and q together (the p = q family).
void bind_sweep(RunConfig& row, const std::string& name, double value) {
  if (name == "pq") {
    row.params["p"] = value;
    row.params["q"] = value;
  } else {
    row.params[name] = value;
  }
}

int write_records(const std::vector<Record>& records, RecordWriter& writer) {
  int status = kExitOk;
  for (const auto& r : records) {
    writer.write(r);
    if (!r.converged) status = kExitNotConverged;
  }
  return status;
}

int cmd_eval(const RunConfig& config, std::ostream& out) {
  RecordWriter writer(config.format, out);
  return write_records(evaluate(config), writer);
}

int cmd_scan(const RunConfig& base, const std::vector<std::string>& specs, std::ostream& out) {
  if (specs.empty() || specs.size() > 2) throw ParameterError("scan takes one or two --sweep options");
  std::vector<Sweep> sweeps;
  for (const auto& spec : specs) sweeps.push_back(parse_sweep(spec));
  if (sweeps.size() == 2 && (sweeps[0].name == sweeps[1].name ||
                             (sweeps[0].name == "pq" && (sweeps[1].name == "p" || sweeps[1].name == "q")) ||
                             (sweeps[1].name == "pq" && (sweeps[0].name == "p" || sweeps[0].name == "q")))) {
    throw ParameterError("scan: the two sweeps must vary different parameters");
  }

  // Expand the grid (first sweep outermost) and validate every row up front.
  std::vector<RunConfig> rows;
  const int inner = sweeps.size() == 2 ? sweeps[1].steps : 1;
  for (int i = 0; i < sweeps[0].steps; ++i) {
    for (int j = 0; j < inner; ++j) {
      RunConfig row = base;
      bind_sweep(row, sweeps[0].name, sweeps[0].at(i));
      if (sweeps.size() == 2) bind_sweep(row, sweeps[1].name, sweeps[1].at(j));
      try {
        validate(row);
      } catch (const DomainError& e) {
        throw DomainError("scan row " + std::to_string(rows.size() + 1) + ": " + e.what());
      } catch (const ParameterError& e) {
        throw ParameterError("scan row " + std::to_string(rows.size() + 1) + ": " + e.what());
      }
      rows.push_back(std::move(row));
    }
  }

  RecordWriter writer(base.format, out);
  int status = kExitOk;
  for (const auto& row : rows) {
    if (write_records(evaluate(row), writer) != kExitOk) status = kExitNotConverged;
  }
  return status;
}

int cmd_verify(const std::string& suite_name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.policy.validate();
  const verify::Suite suite = verify::run(suite_name, config.policy);
  write_checks(suite, config.format, out);
  std::size_t failed = 0;
  for (const auto& c : suite) {
    if (c.pass) continue;
    ++failed;
    err << "finding: " << c.suite << '/' << c.check << " failed at " << c.point << " (lhs=" << c.lhs
        << ", rhs=" << c.rhs << ", margin=" << c.margin << ")\n";
  }
  err << "verify " << suite_name << ": " << suite.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Gauss/Kummer functions and Mathieu-type series: evaluation and verification"};
  app.name("pqm");
  app.require_subcommand(1);

  std::string target;
  std::string method = "auto";
  std::string format = "csv";
  std::string seq = "n";
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::map<std::string, double> values;
  std::vector<std::string> sweeps;
  std::string suite = "all";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: csv, json or plain")->capture_default_str();
    sub->add_option_function<double>("--rel-tol", [&](const double& v) { rel_tol = v; }, "Relative tolerance");
    sub->add_option_function<double>("--abs-tol", [&](const double& v) { abs_tol = v; }, "Absolute tolerance");
  };
  const auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", target,
                    "beta, gauss, kummer, mathieu, mathieu-alt, u-integral, bound or bound-alt")
        ->required();
    sub->add_option("--method", method, "auto, direct, integral or both")->capture_default_str();
    sub->add_option("--seq", seq, "Sequence a_n: n, n^k, c*n^k or a literal like 2*n^1.5")->capture_default_str();
    for (const auto& name : numeric_flags()) {
      sub->add_option_function<double>("--" + name, [&values, name](const double& v) { values[name] = v; });
    }
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one target and print one record per method");
  add_target(eval);
  add_common(eval);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", suite,
                         "reductions, two-path, theorem1, laplace, bounds, quadrature-golden, counting, "
                         "closed-tail or all")
      ->capture_default_str();
  add_common(verify_cmd);

  CLI::App* scan = app.add_subcommand("scan", "Evaluate a target over a one- or two-parameter grid");
  add_target(scan);
  add_common(scan);
  scan->add_option("--sweep", sweeps, "name,lo,hi,steps (at most twice); name pq sets p = q")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("pqm");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    RunConfig config;
    config.format = parse_format(format);
    if (rel_tol) config.policy.rel_tol = *rel_tol;
    if (abs_tol) config.policy.abs_tol = *abs_tol;
    if (*verify_cmd) return cmd_verify(suite, config, out, err);

    config.target = parse_target(target);
    config.method = parse_method(method);
    config.seq = seq;
    config.params = values;
    if (*eval) return cmd_eval(config, out);
    return cmd_scan(config, sweeps, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const std::exception& e) {
    // DomainError, DivergenceError, ParameterError, IntegrandError
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace pqm::cli
