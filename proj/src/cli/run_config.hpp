#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "pqm/quadrature.hpp"
#include "pqm/sequence.hpp"
#include "pqm/verify.hpp"

namespace pqm::cli {

enum class Target { beta, gauss, kummer, mathieu, mathieu_alt, u_integral, bound, bound_alt };
enum class Method { automatic, direct, integral, both };
enum class Format { csv, json, plain };

// Throw ParameterError on unknown names.
Target parse_target(const std::string& name);
Method parse_method(const std::string& name);
Format parse_format(const std::string& name);
const char* to_string(Target t);

struct RunConfig {
  Target target = Target::beta;
  Method method = Method::automatic;
  Format format = Format::csv;
  std::map<std::string, double> params;  // --x, --lambda, --k, ...
  std::string seq = "n";
  QuadPolicy policy;
};

// Numeric flags understood by eval and scan.
const std::vector<std::string>& numeric_flags();

// --seq n | n^k | c*n^k (with --k / --scale), or a literal such as 2*n^1.5.
SequenceSpec build_sequence(const RunConfig& config);

// Checks that every parameter the target needs is present and inside its
// domain, without evaluating anything. Throws DomainError / ParameterError.
void validate(const RunConfig& config);

struct Field {
  std::string name;
  double number = 0.0;
  std::string text;  // used instead of `number` when non-empty
};

struct Record {
  std::string target;
  std::string method;
  std::vector<Field> params;
  double value = 0.0;
  double err_est = 0.0;
  std::size_t n_work = 0;
  bool converged = false;
};

// One record per evaluated method (two for Method::both where available).
std::vector<Record> evaluate(const RunConfig& config);

// Streams records in the chosen format; the CSV header is written once,
// before the first record.
class RecordWriter {
 public:
  RecordWriter(Format format, std::ostream& out) : format_(format), out_(out) {}
  void write(const Record& record);

 private:
  Format format_;
  std::ostream& out_;
  bool header_done_ = false;
};

void write_checks(const verify::Suite& suite, Format format, std::ostream& out);

}  // namespace pqm::cli
