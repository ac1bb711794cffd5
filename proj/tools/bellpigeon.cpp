#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bellpigeon/cli.hpp"

namespace {

using bellpigeon::cli::kExitIo;
using bellpigeon::cli::kExitUsage;

// Runs `command` against stdout or --output; open/write failures exit 1.
template <typename Command>
int with_output(const std::string& path, Command&& command) {
  if (path.empty()) {
    const int rc = command(std::cout);
    std::cout.flush();
    return (rc == 0 && !std::cout.good()) ? kExitIo : rc;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitIo;
  }
  const int rc = command(out);
  out.flush();
  return (rc == 0 && !out.good()) ? kExitIo : rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit Bell-inequality and quantum pigeonhole numerics"};
  app.require_subcommand(1);

  bellpigeon::cli::ScanOptions scan_opt;
  std::string scan_format = "csv";
  std::string scan_output;
  CLI::App* scan = app.add_subcommand(
      "scan", "three-setting correlation sum against the setting angle");
  scan->add_option("--state", scan_opt.state, "bell00 or bell11")->required();
  scan->add_option("--from", scan_opt.from_deg, "start angle in degrees");
  scan->add_option("--to", scan_opt.to_deg, "end angle in degrees");
  scan->add_option("--step", scan_opt.step_deg, "grid step in degrees");
  scan->add_option("--format", scan_format, "csv or json");
  scan->add_option("--output", scan_output, "write to file instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "run the deterministic identity suite");
  std::string verify_output;
  verify->add_option("--output", verify_output, "write to file instead of stdout");

  bellpigeon::cli::PigeonholeOptions ph_opt;
  std::string ph_output;
  CLI::App* ph = app.add_subcommand(
      "pigeonhole", "pair amplitudes between uniform pre/postselections");
  ph->add_option("--n", ph_opt.n, "particle count, 2..10")->required();
  ph->add_option("--output", ph_output, "write to file instead of stdout");

  bellpigeon::cli::SampleOptions sample_opt;
  std::string sample_output;
  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo campaign over the three setting pairs");
  sample->add_option("--state", sample_opt.state, "bell00|bell01|bell10|bell11")
      ->required();
  sample->add_option("--theta", sample_opt.theta_deg, "setting angle in degrees");
  sample->add_option("--n", sample_opt.n, "draws per setting pair");
  sample->add_option("--seed", sample_opt.seed, "64-bit generator seed");
  sample->add_option("--output", sample_output, "write to file instead of stdout");

  bellpigeon::cli::WitnessOptions wit_opt;
  std::string wit_output;
  CLI::App* wit = app.add_subcommand(
      "witness", "witness expectation and separability verdict on the Werner line");
  wit->add_option("--p", wit_opt.p, "Werner mixing parameter in [0, 1]")->required();
  wit->add_option("--output", wit_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (scan->parsed()) {
    if (scan_format == "csv") {
      scan_opt.format = bellpigeon::cli::OutputFormat::csv;
    } else if (scan_format == "json") {
      scan_opt.format = bellpigeon::cli::OutputFormat::json;
    } else {
      std::cerr << "error: --format must be csv or json\n";
      return kExitUsage;
    }
    return with_output(scan_output, [&](std::ostream& os) {
      return bellpigeon::cli::cmd_scan(scan_opt, os);
    });
  }
  if (verify->parsed()) {
    return with_output(verify_output, [](std::ostream& os) {
      return bellpigeon::cli::cmd_verify(os);
    });
  }
  if (ph->parsed()) {
    return with_output(ph_output, [&](std::ostream& os) {
      return bellpigeon::cli::cmd_pigeonhole(ph_opt, os);
    });
  }
  if (sample->parsed()) {
    return with_output(sample_output, [&](std::ostream& os) {
      return bellpigeon::cli::cmd_sample(sample_opt, os);
    });
  }
  return with_output(wit_output, [&](std::ostream& os) {
    return bellpigeon::cli::cmd_witness(wit_opt, os);
  });
}
