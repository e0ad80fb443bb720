#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqm/cli.hpp"

using pqm::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

// Value of `column` in CSV row `row` (1-based, header is row 0).
double cell(const std::string& csv, std::size_t row, const std::string& column) {
  const auto rows = lines(csv);
  const auto header = split(rows.at(0));
  const auto fields = split(rows.at(row));
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return std::stod(fields.at(i));
  }
  throw std::runtime_error("no column " + column);
}

}  // namespace

TEST_CASE("eval beta") {
  const auto r = run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--p", "0", "--q", "0"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "target,method,x,y,p,q,value,err_est,n_work,converged");
  CHECK(std::fabs(cell(r.out, 1, "value") - 1.0 / 12.0) < 1e-13);
}

TEST_CASE("eval gauss gives ln 2") {
  const auto r = run({"eval", "--target", "gauss", "--a", "1", "--b", "1", "--c", "2", "--z", "-1", "--p", "0",
                      "--q", "0"});
  CHECK(r.code == 0);
  CHECK(std::fabs(cell(r.out, 1, "value") - std::log(2.0)) < 1e-12);
}

TEST_CASE("eval mathieu both methods agree") {
  const auto r = run({"eval", "--target", "mathieu", "--method", "both", "--lambda", "1", "--eta", "1", "--b", "1",
                      "--c", "2", "--p", "0", "--q", "0", "--r", "1", "--seq", "n"});
  CHECK(r.code == 0);
  REQUIRE(lines(r.out).size() == 3);
  const double direct = cell(r.out, 1, "value");
  const double integral = cell(r.out, 2, "value");
  CHECK(std::fabs(direct - integral) <= 1e-6 * std::fabs(direct));
  CHECK(lines(r.out)[1].rfind("mathieu,direct,", 0) == 0);
  CHECK(lines(r.out)[2].rfind("mathieu,theorem1_integral,", 0) == 0);
}

TEST_CASE("every target evaluates") {
  const std::vector<std::vector<std::string>> cases = {
      {"eval", "--target", "kummer", "--b", "1", "--c", "2", "--z", "-1", "--p", "0.1", "--q", "0.1"},
      {"eval", "--target", "kummer", "--b", "1", "--c", "2", "--z", "-5", "--method", "both"},
      {"eval", "--target", "gauss", "--a", "1", "--b", "1", "--c", "2", "--z", "-0.5", "--p", "0.25", "--q", "0.25",
       "--method", "both"},
      {"eval", "--target", "mathieu-alt", "--lambda", "1", "--eta", "1", "--b", "1", "--c", "2", "--r", "1"},
      {"eval", "--target", "u-integral", "--lambda", "2", "--eta", "2", "--r", "1"},
      {"eval", "--target", "bound", "--lambda", "1", "--eta", "3", "--b", "1", "--c", "2", "--r", "0.5", "--p",
       "0.5", "--q", "0.5", "--method", "both"},
      {"eval", "--target", "bound-alt", "--lambda", "1", "--eta", "2.5", "--b", "1", "--c", "2", "--r", "0.5"},
      {"eval", "--target", "mathieu", "--lambda", "0.5", "--eta", "1", "--b", "0.5", "--c", "1.5", "--r", "0.5",
       "--seq", "c*n^k", "--scale", "2", "--k", "1.5"},
      {"eval", "--target", "mathieu", "--lambda", "0.5", "--eta", "1", "--b", "0.5", "--c", "1.5", "--r", "0.5",
       "--seq", "n^2"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    INFO(args[2] << ": " << r.err);
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() >= 2);
  }
}

TEST_CASE("bound is at least the direct value") {
  const auto r = run({"eval", "--target", "bound", "--method", "both", "--lambda", "1", "--eta", "3", "--b", "1",
                      "--c", "2", "--r", "0.5", "--p", "0.5", "--q", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(cell(r.out, 1, "value") >= cell(r.out, 2, "value"));
}

TEST_CASE("domain errors exit with 1 and name the precondition") {
  const auto z = run({"eval", "--target", "gauss", "--a", "1", "--b", "1", "--c", "2", "--z", "1.5"});
  CHECK(z.code == 1);
  CHECK(z.out.empty());
  CHECK(z.err.find("z < 1") != std::string::npos);

  const auto diverge = run({"eval", "--target", "mathieu", "--lambda", "0.5", "--eta", "0.5", "--b", "1", "--c",
                            "2", "--r", "0.5"});
  CHECK(diverge.code == 1);
  CHECK(diverge.err.find("diverges") != std::string::npos);

  CHECK(run({"eval", "--target", "beta", "--x", "2"}).code == 1);
  CHECK(run({"eval", "--target", "nope", "--x", "2"}).code == 1);
  CHECK(run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--method", "direct"}).code == 1);
  CHECK(run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--format", "xml"}).code == 1);
  CHECK(run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--rel-tol", "0"}).code == 1);
  CHECK(run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--p", "-1"}).code == 1);
  CHECK(run({"eval", "--target", "mathieu", "--lambda", "1", "--eta", "1", "--b", "1", "--c", "2", "--r", "0.5",
             "--seq", "log(n)"})
            .code == 1);
  CHECK(run({"eval", "--target", "bound", "--lambda", "1.5", "--eta", "2", "--b", "1", "--c", "3", "--r", "0.5"})
            .code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("budget exhaustion exits with 2") {
  const auto r = run({"eval", "--target", "gauss", "--a", "1", "--b", "1", "--c", "2", "--z", "0.99", "--p", "0.1",
                      "--q", "0.1", "--method", "direct", "--rel-tol", "1e-15"});
  CHECK(r.code == 2);
  CHECK(r.out.find(",false") != std::string::npos);
}

TEST_CASE("json output is one parseable object per line") {
  const auto r = run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "p,0,2,5", "--format", "json"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  double previous = INFINITY;
  for (const auto& row : rows) {
    const auto j = nlohmann::json::parse(row);
    CHECK(j["target"] == "beta");
    CHECK(j["converged"] == true);
    CHECK(j["value"].get<double>() <= previous);
    previous = j["value"].get<double>();
  }
}

TEST_CASE("plain output") {
  const auto r = run({"eval", "--target", "beta", "--x", "2", "--y", "3", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value   = 0.0833333") != std::string::npos);
}

TEST_CASE("scan: row counts, order and sweeps") {
  const auto r = run({"scan", "--target", "mathieu", "--lambda", "1", "--eta", "1", "--b", "1", "--c", "2", "--sweep",
                      "r,0.1,0.9,9"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::fabs(cell(r.out, i, "r") - (0.1 + 0.1 * static_cast<double>(i - 1))) < 1e-12);
  }

  const auto pq = run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "pq,0,2,5"});
  CHECK(pq.code == 0);
  REQUIRE(lines(pq.out).size() == 6);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(cell(pq.out, i, "p") == cell(pq.out, i, "q"));
  for (std::size_t i = 2; i <= 5; ++i) CHECK(cell(pq.out, i, "value") <= cell(pq.out, i - 1, "value"));

  const auto grid = run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "p,0,1,3", "--sweep",
                         "q,0,1,2"});
  CHECK(grid.code == 0);
  CHECK(lines(grid.out).size() == 7);
  CHECK(cell(grid.out, 2, "q") == 1.0);
  CHECK(cell(grid.out, 3, "p") == 0.5);
}

TEST_CASE("scan: bound dominates direct along lambda") {
  const auto r = run({"scan", "--target", "bound", "--method", "both", "--eta", "2.5", "--b", "1", "--c", "2", "--r",
                      "0.5", "--p", "0.25", "--q", "0.25", "--sweep", "lambda,0.25,1.0,4"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i < rows.size(); i += 2) {
    CHECK(rows[i].find("bound_rhs") != std::string::npos);
    CHECK(cell(r.out, i, "value") >= cell(r.out, i + 1, "value"));
  }
}

TEST_CASE("scan: a domain violation in any row aborts before output") {
  const auto r = run({"scan", "--target", "mathieu", "--lambda", "1", "--eta", "1", "--b", "1", "--c", "2", "--sweep",
                      "r,0.5,1.5,5"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("scan row 4") != std::string::npos);

  CHECK(run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "p,0,1"}).code == 1);
  CHECK(run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "w,0,1,3"}).code == 1);
  CHECK(run({"scan", "--target", "beta", "--x", "2", "--y", "3", "--sweep", "p,0,1,3", "--sweep", "pq,0,1,3"}).code ==
        1);
}

TEST_CASE("identical command lines give byte-identical output") {
  const std::vector<std::string> args = {"scan",   "--target", "mathieu-alt", "--lambda", "0.7", "--eta",  "1.3",
                                         "--b",    "0.6",      "--c",         "1.8",      "--p", "0.2",    "--q",
                                         "0.3",    "--method", "both",        "--sweep",  "r,0.2,0.8,3"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("verify: suites, records and exit code") {
  const auto r = run({"verify", "theorem1"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 25);
  CHECK(rows[0] == "suite,check,point,lhs,rhs,margin,pass");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].substr(rows[i].size() - 5) == ",true");

  const auto red = run({"verify", "reductions", "--format", "json"});
  CHECK(red.code == 0);
  for (const auto& row : lines(red.out)) CHECK(nlohmann::json::parse(row)["pass"] == true);

  CHECK(run({"verify", "quadrature-golden"}).code == 0);
  CHECK(run({"verify", "no-such-suite"}).code == 1);
}

TEST_CASE("verify: failing checks exit with 3") {
  // A loose tolerance stops the quadrature short of the 1e-10 golden-suite accuracy.
  const auto r = run({"verify", "quadrature-golden", "--rel-tol", "1e-3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("finding:") != std::string::npos);
}
