#include <cstdio>
#include <string>

#include <json.hpp>

#include "run_config.hpp"

namespace pqm::cli {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::string text_of(const Field& f) { return f.text.empty() ? number(f.number) : f.text; }

}  // namespace

void RecordWriter::write(const Record& r) {
  switch (format_) {
    case Format::csv: {
      if (!header_done_) {
        out_ << "target,method";
        for (const auto& f : r.params) out_ << ',' << f.name;
        out_ << ",value,err_est,n_work,converged\n";
        header_done_ = true;
      }
      out_ << r.target << ',' << r.method;
      for (const auto& f : r.params) out_ << ',' << csv_cell(text_of(f));
      out_ << ',' << number(r.value) << ',' << number(r.err_est) << ',' << r.n_work << ','
           << (r.converged ? "true" : "false") << '\n';
      break;
    }
    case Format::json: {
      nlohmann::ordered_json j;
      j["target"] = r.target;
      j["method"] = r.method;
      for (const auto& f : r.params) {
        if (f.text.empty()) {
          j[f.name] = f.number;
        } else {
          j[f.name] = f.text;
        }
      }
      j["value"] = r.value;
      j["err_est"] = r.err_est;
      j["n_work"] = r.n_work;
      j["converged"] = r.converged;
      out_ << j.dump() << '\n';
      break;
    }
    case Format::plain: {
      out_ << r.target << " [" << r.method << "]";
      for (const auto& f : r.params) out_ << ' ' << f.name << '=' << text_of(f);
      out_ << "\n  value   = " << number(r.value) << "\n  err_est = " << number(r.err_est)
           << "\n  n_work  = " << r.n_work << "\n  converged = " << (r.converged ? "true" : "false") << '\n';
      break;
    }
  }
}

void write_checks(const verify::Suite& suite, Format format, std::ostream& out) {
  if (format == Format::csv) out << "suite,check,point,lhs,rhs,margin,pass\n";
  for (const auto& c : suite) {
    switch (format) {
      case Format::csv:
        out << c.suite << ',' << c.check << ',' << csv_cell(c.point) << ',' << number(c.lhs) << ','
            << number(c.rhs) << ',' << number(c.margin) << ',' << (c.pass ? "true" : "false") << '\n';
        break;
      case Format::json: {
        nlohmann::ordered_json j;
        j["suite"] = c.suite;
        j["check"] = c.check;
        j["point"] = c.point;
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["margin"] = c.margin;
        j["pass"] = c.pass;
        out << j.dump() << '\n';
        break;
      }
      case Format::plain:
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.check << "  " << c.point
            << "  lhs=" << number(c.lhs) << " rhs=" << number(c.rhs) << " margin=" << number(c.margin) << '\n';
        break;
    }
  }
}

}  // namespace pqm::cli
