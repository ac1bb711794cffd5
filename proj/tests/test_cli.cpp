#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "bellpigeon/cli.hpp"
#include "json.hpp"

using namespace bellpigeon;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("fixed-precision formatting is stable and round-trips") {
  CHECK(cli::format_double(1.5) == "1.5");
  CHECK(cli::format_double(120.0) == "120");
  CHECK(cli::format_double(-0.125) == "-0.125");
  CHECK(cli::format_double(0.0) == "0");
  CHECK(cli::format_double(2.0 * std::sqrt(2.0)) == "2.82842712475");

  for (const double x : {3.14159265358979, -1.0 / 3.0, 1e-12, 123456.789,
                         -0.4999999999}) {
    const double back = num(cli::format_double(x));
    CHECK(std::abs(back - x) <= 5e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("scan emits the fixed CSV header and an inclusive grid") {
  cli::ScanOptions opt;
  opt.state = "bell11";
  std::ostringstream out;
  REQUIRE(cli::cmd_scan(opt, out) == cli::kExitOk);

  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 182);  // header + 181 rows for 0..180 step 1
  CHECK(lines[0] == "theta_deg,total,zz_component,xx_component");

  const auto first = fields_of(lines[1]);
  REQUIRE(first.size() == 4);
  CHECK(first[0] == "0");
  CHECK(num(first[1]) == doctest::Approx(-3.0).epsilon(1e-11));
  CHECK(num(first[2]) == doctest::Approx(-3.0).epsilon(1e-11));
  CHECK(std::abs(num(first[3])) < 1e-11);

  const auto at90 = fields_of(lines[91]);
  CHECK(at90[0] == "90");
  CHECK(num(at90[1]) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(std::abs(num(at90[2])) < 1e-11);
  CHECK(num(at90[3]) == doctest::Approx(1.0).epsilon(1e-11));

  const auto at120 = fields_of(lines[121]);
  CHECK(at120[0] == "120");
  CHECK(num(at120[1]) == doctest::Approx(1.5).epsilon(1e-11));
  CHECK(num(at120[2]) == doctest::Approx(0.75).epsilon(1e-11));
  CHECK(num(at120[3]) == doctest::Approx(0.75).epsilon(1e-11));

  const auto last = fields_of(lines[181]);
  CHECK(last[0] == "180");
}

TEST_CASE("scan output is byte-identical across runs") {
  cli::ScanOptions opt;
  opt.state = "bell00";
  std::ostringstream first;
  std::ostringstream second;
  REQUIRE(cli::cmd_scan(opt, first) == cli::kExitOk);
  REQUIRE(cli::cmd_scan(opt, second) == cli::kExitOk);
  CHECK(first.str() == second.str());

  const auto lines = lines_of(first.str());
  const auto at0 = fields_of(lines[1]);
  CHECK(num(at0[1]) == doctest::Approx(3.0).epsilon(1e-11));
}

TEST_CASE("scan honors fractional steps") {
  cli::ScanOptions opt;
  opt.from_deg = 0.0;
  opt.to_deg = 1.0;
  opt.step_deg = 0.5;
  std::ostringstream out;
  REQUIRE(cli::cmd_scan(opt, out) == cli::kExitOk);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(fields_of(lines[1])[0] == "0");
  CHECK(fields_of(lines[2])[0] == "0.5");
  CHECK(fields_of(lines[3])[0] == "1");
}

TEST_CASE("scan JSON carries the schema tag and the same values") {
  cli::ScanOptions opt;
  opt.state = "bell11";
  opt.format = cli::OutputFormat::json;
  std::ostringstream out;
  REQUIRE(cli::cmd_scan(opt, out) == cli::kExitOk);

  const json doc = json::parse(out.str());
  CHECK(doc.at("schema").get<std::string>() == "bellpigeon/1");
  CHECK(doc.at("command").get<std::string>() == "scan");
  CHECK(doc.at("state").get<std::string>() == "bell11");
  REQUIRE(doc.at("points").size() == 181);
  const json& p = doc.at("points")[120];
  CHECK(p.at("theta_deg").get<double>() == 120.0);
  CHECK(p.at("total").get<double>() == doctest::Approx(1.5).epsilon(1e-11));
  CHECK(p.at("zz_component").get<double>() ==
        doctest::Approx(0.75).epsilon(1e-11));
  CHECK(p.at("xx_component").get<double>() ==
        doctest::Approx(0.75).epsilon(1e-11));
}

TEST_CASE("scan rejects bad options with the usage exit code") {
  std::ostringstream sink;
  {
    cli::ScanOptions opt;
    opt.state = "bell01";
    CHECK(cli::cmd_scan(opt, sink) == cli::kExitUsage);
  }
  {
    cli::ScanOptions opt;
    opt.step_deg = 0.0;
    CHECK(cli::cmd_scan(opt, sink) == cli::kExitUsage);
  }
  {
    cli::ScanOptions opt;
    opt.from_deg = 90.0;
    opt.to_deg = 30.0;
    CHECK(cli::cmd_scan(opt, sink) == cli::kExitUsage);
  }
  {
    cli::ScanOptions opt;
    opt.to_deg = 270.0;
    CHECK(cli::cmd_scan(opt, sink) == cli::kExitUsage);
  }
}

TEST_CASE("the identity suite passes every check") {
  std::ostringstream out;
  CHECK(cli::cmd_verify(out) == cli::kExitOk);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() >= 26);  // at least 25 checks plus the summary

  int pass_count = 0;
  for (std::size_t k = 0; k + 1 < lines.size(); ++k) {
    CHECK(lines[k].substr(0, 6) == "PASS  ");
    if (lines[k].substr(0, 4) == "PASS") ++pass_count;
    CHECK(lines[k].find("residual=") != std::string::npos);
    CHECK(lines[k].find("tol=") != std::string::npos);
  }
  CHECK(pass_count >= 25);
  CHECK(lines.back().substr(0, 4) == "OK  ");
}

TEST_CASE("pigeonhole reports vanishing same-box amplitudes as JSON") {
  cli::PigeonholeOptions opt;
  opt.n = 3;
  std::ostringstream out;
  REQUIRE(cli::cmd_pigeonhole(opt, out) == cli::kExitOk);

  const json doc = json::parse(out.str());
  CHECK(doc.at("schema").get<std::string>() == "bellpigeon/1");
  CHECK(doc.at("command").get<std::string>() == "pigeonhole");
  CHECK(doc.at("n").get<int>() == 3);
  CHECK(doc.at("preselection").get<std::string>() == "plus_product");
  CHECK(doc.at("postselection").get<std::string>() == "plus_i_product");
  CHECK(doc.at("box").get<std::string>() == "same");
  REQUIRE(doc.at("pairs").size() == 3);
  const json& pair0 = doc.at("pairs")[0];
  CHECK(pair0.at("i").get<int>() == 1);
  CHECK(pair0.at("j").get<int>() == 2);
  for (const json& pair : doc.at("pairs")) {
    CHECK(std::abs(pair.at("amplitude").at("re").get<double>()) < 1e-12);
    CHECK(std::abs(pair.at("amplitude").at("im").get<double>()) < 1e-12);
    CHECK(pair.at("probability").get<double>() < 1e-12);
  }

  std::ostringstream sink;
  opt.n = 1;
  CHECK(cli::cmd_pigeonhole(opt, sink) == cli::kExitUsage);
  opt.n = 11;
  CHECK(cli::cmd_pigeonhole(opt, sink) == cli::kExitUsage);
}

TEST_CASE("sampling campaigns report both violation directions") {
  cli::SampleOptions opt;
  opt.state = "bell00";
  opt.theta_deg = 120.0;
  opt.n = 20000;
  opt.seed = 7;
  std::ostringstream out;
  REQUIRE(cli::cmd_sample(opt, out) == cli::kExitOk);

  const json doc = json::parse(out.str());
  CHECK(doc.at("schema").get<std::string>() == "bellpigeon/1");
  CHECK(doc.at("command").get<std::string>() == "sample");
  CHECK(doc.at("state").get<std::string>() == "bell00");
  CHECK(doc.at("theta_deg").get<double>() == 120.0);
  CHECK(doc.at("n").get<std::uint64_t>() == 20000);
  CHECK(doc.at("seed").get<std::uint64_t>() == 7);
  REQUIRE(doc.at("pairs").size() == 3);
  CHECK(doc.at("pairs")[0].at("setting_a").get<std::string>() == "a");
  CHECK(doc.at("pairs")[0].at("setting_b").get<std::string>() == "b");
  CHECK(doc.at("pairs")[2].at("setting_a").get<std::string>() == "b");

  const double sum = doc.at("sum").get<double>();
  const double sum_err = doc.at("sum_stderr").get<double>();
  CHECK(std::abs(sum - (-1.5)) <= 4.0 * sum_err);
  CHECK(doc.at("bound").get<double>() == -1.0);
  CHECK(doc.at("violated").get<bool>());
  for (const json& pair : doc.at("pairs")) {
    const double e = pair.at("e").get<double>();
    const double err = pair.at("stderr").get<double>();
    CHECK(std::abs(e - (-0.5)) <= 4.0 * err);
  }

  // The opposite state violates the upper side.
  opt.state = "bell11";
  std::ostringstream upper;
  REQUIRE(cli::cmd_sample(opt, upper) == cli::kExitOk);
  const json up = json::parse(upper.str());
  CHECK(up.at("bound").get<double>() == 1.0);
  CHECK(up.at("violated").get<bool>());
  CHECK(std::abs(up.at("sum").get<double>() - 1.5) <=
        4.0 * up.at("sum_stderr").get<double>());
}

TEST_CASE("sampling output is deterministic for a fixed seed") {
  cli::SampleOptions opt;
  opt.n = 5000;
  opt.seed = 123;
  std::ostringstream first;
  std::ostringstream second;
  REQUIRE(cli::cmd_sample(opt, first) == cli::kExitOk);
  REQUIRE(cli::cmd_sample(opt, second) == cli::kExitOk);
  CHECK(first.str() == second.str());

  std::ostringstream other;
  opt.seed = 124;
  REQUIRE(cli::cmd_sample(opt, other) == cli::kExitOk);
  CHECK(first.str() != other.str());
}

TEST_CASE("sampling rejects bad options with the usage exit code") {
  std::ostringstream sink;
  {
    cli::SampleOptions opt;
    opt.state = "bell2x";
    CHECK(cli::cmd_sample(opt, sink) == cli::kExitUsage);
  }
  {
    cli::SampleOptions opt;
    opt.n = 0;
    CHECK(cli::cmd_sample(opt, sink) == cli::kExitUsage);
  }
  {
    cli::SampleOptions opt;
    opt.theta_deg = 400.0;
    CHECK(cli::cmd_sample(opt, sink) == cli::kExitUsage);
  }
}

TEST_CASE("witness reports the affine expectation and the transpose verdict") {
  {
    cli::WitnessOptions opt;
    opt.p = 0.5;
    std::ostringstream out;
    REQUIRE(cli::cmd_witness(opt, out) == cli::kExitOk);
    const json doc = json::parse(out.str());
    CHECK(doc.at("schema").get<std::string>() == "bellpigeon/1");
    CHECK(doc.at("command").get<std::string>() == "witness");
    CHECK(doc.at("p").get<double>() == 0.5);
    CHECK(doc.at("expectation").get<double>() ==
          doctest::Approx(-0.125).epsilon(1e-11));
    CHECK(doc.at("entangled_flag").get<bool>());
    CHECK_FALSE(doc.at("ppt_verdict").get<bool>());
    CHECK(doc.at("min_pt_eigenvalue").get<double>() ==
          doctest::Approx(-0.125).epsilon(1e-11));
  }
  {
    cli::WitnessOptions opt;
    opt.p = 0.2;
    std::ostringstream out;
    REQUIRE(cli::cmd_witness(opt, out) == cli::kExitOk);
    const json doc = json::parse(out.str());
    CHECK(doc.at("expectation").get<double>() ==
          doctest::Approx(0.1).epsilon(1e-11));
    CHECK_FALSE(doc.at("entangled_flag").get<bool>());
    CHECK(doc.at("ppt_verdict").get<bool>());
    CHECK(doc.at("min_pt_eigenvalue").get<double>() ==
          doctest::Approx(0.1).epsilon(1e-11));
  }
  std::ostringstream sink;
  cli::WitnessOptions opt;
  opt.p = 1.1;
  CHECK(cli::cmd_witness(opt, sink) == cli::kExitUsage);
  opt.p = -0.1;
  CHECK(cli::cmd_witness(opt, sink) == cli::kExitUsage);
}
