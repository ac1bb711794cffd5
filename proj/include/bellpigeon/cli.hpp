#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bellpigeon::cli {

// Version tag stamped into every JSON document.
inline constexpr std::string_view kSchema = "bellpigeon/1";

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIdentityFailure = 3;

enum class OutputFormat { csv, json };

struct ScanOptions {
  std::string state = "bell11";  // bell00 | bell11
  double from_deg = 0.0;
  double to_deg = 180.0;
  double step_deg = 1.0;
  OutputFormat format = OutputFormat::csv;
};

struct PigeonholeOptions {
  int n = 3;
};

struct SampleOptions {
  std::string state = "bell00";  // bell00 | bell01 | bell10 | bell11
  double theta_deg = 120.0;
  std::uint64_t n = 100000;
  std::uint64_t seed = 1;
};

struct WitnessOptions {
  double p = 0.5;
};

// 12 significant digits, locale-independent (std::to_chars), so emitted
// values round-trip through text diffs deterministically.
std::string format_double(double x);

// Each command validates its options (usage problems -> exit 2, message on
// stderr), writes its report to `os`, and returns the process exit code.
int cmd_scan(const ScanOptions& opt, std::ostream& os);
int cmd_verify(std::ostream& os);  // exit 3 when any identity check fails
int cmd_pigeonhole(const PigeonholeOptions& opt, std::ostream& os);
int cmd_sample(const SampleOptions& opt, std::ostream& os);
int cmd_witness(const WitnessOptions& opt, std::ostream& os);

}  // namespace bellpigeon::cli
