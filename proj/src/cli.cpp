#include "bellpigeon/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <vector>

#include "bellpigeon/bell.hpp"
#include "bellpigeon/pigeonhole.hpp"
#include "bellpigeon/samplers.hpp"
#include "bellpigeon/separability.hpp"

namespace bellpigeon::cli {

using states::DensityOperator;

namespace {

bool angle_ok(double deg) { return deg >= 0.0 && deg < 360.0; }

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

bool bell_state_name(std::string_view name, int* j, int* k) {
  if (name.size() != 6 || name.substr(0, 4) != "bell") return false;
  const char cj = name[4];
  const char ck = name[5];
  if ((cj != '0' && cj != '1') || (ck != '0' && ck != '1')) return false;
  *j = cj - '0';
  *k = ck - '0';
  return true;
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

int cmd_scan(const ScanOptions& opt, std::ostream& os) {
  if (opt.state != "bell00" && opt.state != "bell11") {
    return usage_error("scan expects --state bell00 or bell11");
  }
  // The reduced-operator split is defined on [0, 180] degrees only.
  if (!(opt.from_deg >= 0.0 && opt.from_deg <= 180.0) ||
      !(opt.to_deg >= 0.0 && opt.to_deg <= 180.0)) {
    return usage_error("scan angles must lie in [0, 180]");
  }
  if (!(opt.step_deg > 0.0)) return usage_error("scan step must be positive");
  if (opt.from_deg > opt.to_deg) {
    return usage_error("scan range start exceeds its end");
  }

  int j = 0;
  int k = 0;
  bell_state_name(opt.state, &j, &k);
  const DensityOperator rho = states::bell_projector(j, k);

  // The grid is generated in degrees so printed abscissas stay exact.
  std::vector<double> grid;
  const double limit = opt.to_deg + opt.step_deg * 1e-9;
  for (std::size_t step = 0;; ++step) {
    const double theta_deg = opt.from_deg + static_cast<double>(step) * opt.step_deg;
    if (theta_deg > limit) break;
    grid.push_back(theta_deg);
  }

  if (opt.format == OutputFormat::csv) {
    os << "theta_deg,total,zz_component,xx_component\n";
    for (double theta_deg : grid) {
      const bell::ScanPoint p = bell::scan_point(rho, bell::radians(theta_deg));
      os << format_double(theta_deg) << ',' << format_double(p.total) << ','
         << format_double(p.zz_part) << ',' << format_double(p.xx_part) << '\n';
    }
  } else {
    os << "{\"schema\":\"" << kSchema << "\",\"command\":\"scan\",\"state\":\""
       << opt.state << "\",\"points\":[";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const bell::ScanPoint p = bell::scan_point(rho, bell::radians(grid[i]));
      if (i != 0) os << ',';
      os << "{\"theta_deg\":" << format_double(grid[i])
         << ",\"total\":" << format_double(p.total)
         << ",\"zz_component\":" << format_double(p.zz_part)
         << ",\"xx_component\":" << format_double(p.xx_part) << '}';
    }
    os << "]}\n";
  }
  return os.good() ? kExitOk : kExitIo;
}

namespace {

struct IdentityCheck {
  std::string name;
  double residual;
  double tol;
};

std::vector<IdentityCheck> run_identity_checks() {
  using linalg::CMatrix;
  using states::Ket;
  std::vector<IdentityCheck> checks;
  const auto add = [&checks](std::string name, double residual, double tol) {
    checks.push_back(IdentityCheck{std::move(name), residual, tol});
  };

  // Bell basis Gram matrix vs identity.
  {
    double r = 0.0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const linalg::Complex g = states::inner(
            states::bell(a >> 1, a & 1), states::bell(b >> 1, b & 1));
        const linalg::Complex want = (a == b) ? 1.0 : 0.0;
        r = std::max(r, std::abs(g - want));
      }
    }
    add("bell-basis-orthonormality", r, 1e-12);
  }

  // The four circular product states resolve the identity.
  {
    CMatrix sum = CMatrix::zero(4);
    for (int k = 1; k <= 4; ++k) {
      const Ket phi = states::postselected(k);
      sum = sum + linalg::outer(phi.amplitudes(), phi.amplitudes());
    }
    add("circular-product-completeness",
        linalg::max_abs_diff(sum, CMatrix::identity(4)), 1e-12);
  }

  const pigeonhole::Projector same = pigeonhole::projector(pigeonhole::BoxLabel::same);
  const pigeonhole::Projector diff = pigeonhole::projector(pigeonhole::BoxLabel::diff);
  add("box-projector-completeness",
      linalg::max_abs_diff(same.matrix + diff.matrix, CMatrix::identity(4)), 1e-12);
  add("box-projector-idempotence-same",
      linalg::max_abs_diff(linalg::mul(same.matrix, same.matrix), same.matrix), 1e-12);
  add("box-projector-idempotence-diff",
      linalg::max_abs_diff(linalg::mul(diff.matrix, diff.matrix), diff.matrix), 1e-12);
  add("box-projector-orthogonality",
      linalg::max_norm(linalg::mul(same.matrix, diff.matrix)), 1e-12);

  // Collapse of the uniform pair onto each box.
  {
    const Ket pre = pigeonhole::plus_product(2);
    add("same-box-collapse-of-uniform-pair",
        linalg::max_abs_diff(pigeonhole::collapse(pre, same).amplitudes(),
                             states::bell(0, 0).amplitudes()),
        1e-12);
    add("diff-box-collapse-of-uniform-pair",
        linalg::max_abs_diff(pigeonhole::collapse(pre, diff).amplitudes(),
                             states::bell(0, 1).amplitudes()),
        1e-12);
    const double pr = linalg::inner(pre.amplitudes(),
                                    linalg::apply(same.matrix, pre.amplitudes()))
                          .real();
    add("same-box-preselection-probability", std::abs(pr - 0.5), 1e-12);
  }

  // Postselection probability table over the circular products: two Bell
  // collapse outcomes against the four products, half zeros, half 1/2.
  {
    const double expected_b00[4] = {0.0, 0.5, 0.5, 0.0};
    const double expected_b01[4] = {0.5, 0.0, 0.0, 0.5};
    for (int k = 1; k <= 4; ++k) {
      const Ket phi = states::postselected(k);
      add("postselection-probability-phi" + std::to_string(k) + "-bell00",
          std::abs(pigeonhole::postselect_probability(phi, states::bell(0, 0)) -
                   expected_b00[k - 1]),
          1e-12);
      add("postselection-probability-phi" + std::to_string(k) + "-bell01",
          std::abs(pigeonhole::postselect_probability(phi, states::bell(0, 1)) -
                   expected_b01[k - 1]),
          1e-12);
    }
  }

  // Same-box pair amplitudes all vanish between the uniform preparations.
  for (int n = 3; n <= 5; ++n) {
    double r = 0.0;
    for (const pigeonhole::PairAmplitude& pa : pigeonhole::pigeonhole_report(n)) {
      r = std::max(r, std::abs(pa.result.amplitude));
    }
    add(std::to_string(n) + "-particle-pair-amplitudes", r, 1e-12);
  }

  // Separable family: Pauli form vs equal Bell mixture, member by member.
  {
    struct FamilyRow {
      states::Axis axis;
      states::Sign sign;
      const char* name;
      int bells[2][2];
    };
    const FamilyRow rows[6] = {
        {states::Axis::z, states::Sign::plus, "z-plus", {{0, 0}, {1, 0}}},
        {states::Axis::x, states::Sign::plus, "x-plus", {{0, 0}, {0, 1}}},
        {states::Axis::y, states::Sign::plus, "y-plus", {{0, 1}, {1, 0}}},
        {states::Axis::y, states::Sign::minus, "y-minus", {{0, 0}, {1, 1}}},
        {states::Axis::x, states::Sign::minus, "x-minus", {{1, 0}, {1, 1}}},
        {states::Axis::z, states::Sign::minus, "z-minus", {{0, 1}, {1, 1}}},
    };
    double ppt_residual = 0.0;
    for (const FamilyRow& row : rows) {
      const DensityOperator member = states::rho_family(row.axis, row.sign);
      const CMatrix mixture =
          0.5 * (states::bell_projector(row.bells[0][0], row.bells[0][1]).matrix() +
                 states::bell_projector(row.bells[1][0], row.bells[1][1]).matrix());
      add(std::string("family-dual-construction-") + row.name,
          linalg::max_abs_diff(member.matrix(), mixture), 1e-12);
      const separability::PptVerdict v = separability::ppt_check(member);
      ppt_residual = std::max(ppt_residual, std::max(0.0, -v.min_pt_eigenvalue));
    }
    add("family-positive-partial-transpose", ppt_residual, 1e-10);
  }

  // Bell projectors are the entangled extreme: partial transposition digs
  // an eigenvalue -1/2 out of each.
  {
    double r = 0.0;
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const separability::PptVerdict v =
            separability::ppt_check(states::bell_projector(j, k));
        r = std::max(r, std::abs(v.min_pt_eigenvalue + 0.5));
      }
    }
    add("bell-projector-negative-partial-transpose", r, 1e-10);
  }

  add("y-family-partial-transpose-swap",
      linalg::max_abs_diff(
          linalg::partial_transpose(
              states::rho_family(states::Axis::y, states::Sign::plus).matrix(),
              linalg::Subsystem::second),
          states::rho_family(states::Axis::y, states::Sign::minus).matrix()),
      1e-12);

  // Normalized trace of (sigma_i sigma_i)(sigma_j sigma_j) is delta_ij.
  {
    double r = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double want = (i == j) ? 1.0 : 0.0;
        r = std::max(r, std::abs(separability::vanishing_trace(i, j) - want));
      }
    }
    add("pauli-pair-trace-table", r, 1e-12);
  }

  {
    const auto table = separability::zero_event_table();
    const double expected[2][4] = {{0.0, 0.5, 0.5, 0.0}, {0.5, 0.0, 0.0, 0.5}};
    double r = 0.0;
    double row_r = 0.0;
    for (int i = 0; i < 2; ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < 4; ++j) {
        r = std::max(r, std::abs(table[i][j] - expected[i][j]));
        row_sum += table[i][j];
      }
      row_r = std::max(row_r, std::abs(row_sum - 1.0));
    }
    add("zero-event-table", r, 1e-12);
    add("zero-event-rows-sum", row_r, 1e-12);
  }

  // Spectrum of the symmetric-setting operator -(3/4)(ZZ + XX).
  {
    const CMatrix bm = -0.75 * (states::pauli_pair(3, 3) + states::pauli_pair(1, 1));
    const std::vector<linalg::EigenPair> eig = linalg::hermitian_eigensystem(bm);
    const double want[4] = {-1.5, 0.0, 0.0, 1.5};
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(eig[i].eigenvalue - want[i]));
    add("reduced-bell-spectrum", r, 1e-10);

    const double low = std::abs(
        linalg::inner(eig[0].eigenvector, states::bell(0, 0).amplitudes()));
    const double high = std::abs(
        linalg::inner(eig[3].eigenvector, states::bell(1, 1).amplitudes()));
    add("reduced-bell-eigenvectors",
        std::max(std::abs(low - 1.0), std::abs(high - 1.0)), 1e-8);
  }

  {
    const std::vector<double> eig = linalg::eigenvalues(bell::chsh_max_form());
    const double s = 2.0 * std::sqrt(2.0);
    const double want[4] = {-s, 0.0, 0.0, s};
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(eig[i] - want[i]));
    add("chsh-tsirelson-spectrum", r, 1e-10);
  }

  {
    const separability::Witness w = separability::werner_witness();
    double r = 0.0;
    for (int i = 0; i <= 10; ++i) {
      const double p = 0.1 * i;
      r = std::max(r, std::abs(separability::witness_expectation(w, states::werner(p)) -
                               (0.25 - 0.75 * p)));
    }
    add("werner-witness-line", r, 1e-10);
    add("werner-ppt-threshold",
        std::abs(separability::werner_ppt_threshold() - 1.0 / 3.0), 1e-6);
  }

  {
    const bell::FMinimum m = bell::minimize_F();
    add("reduced-objective-minimum", std::abs(m.value + 1.5), 1e-6);
    add("reduced-objective-argmin",
        std::max(std::abs(m.alpha - bell::radians(120.0)),
                 std::abs(m.beta - bell::radians(120.0))),
        bell::radians(0.01));
  }

  return checks;
}

}  // namespace

int cmd_verify(std::ostream& os) {
  std::vector<IdentityCheck> checks;
  try {
    checks = run_identity_checks();
  } catch (const std::exception& e) {
    os << "FAIL  identity-suite-aborted  " << e.what() << "\n";
    return kExitIdentityFailure;
  }

  bool all_ok = true;
  for (const IdentityCheck& c : checks) {
    const bool ok = c.residual <= c.tol;
    all_ok = all_ok && ok;
    os << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(46) << c.name
       << std::right << "  residual=" << format_double(c.residual)
       << "  tol=" << format_double(c.tol) << "\n";
  }
  os << (all_ok ? "OK" : "FAILED") << "  " << checks.size() << " checks\n";
  if (!os.good()) return kExitIo;
  return all_ok ? kExitOk : kExitIdentityFailure;
}

int cmd_pigeonhole(const PigeonholeOptions& opt, std::ostream& os) {
  if (opt.n < 2 || opt.n > pigeonhole::kMaxParticles) {
    return usage_error("pigeonhole count must lie in [2, 10]");
  }
  const std::vector<pigeonhole::PairAmplitude> report =
      pigeonhole::pigeonhole_report(opt.n);
  os << "{\"schema\":\"" << kSchema << "\",\"command\":\"pigeonhole\",\"n\":" << opt.n
     << ",\"preselection\":\"plus_product\",\"postselection\":\"plus_i_product\","
        "\"box\":\"same\",\"pairs\":[";
  for (std::size_t i = 0; i < report.size(); ++i) {
    const pigeonhole::PairAmplitude& pa = report[i];
    if (i != 0) os << ',';
    os << "{\"i\":" << pa.pair.i << ",\"j\":" << pa.pair.j << ",\"amplitude\":{\"re\":"
       << format_double(pa.result.amplitude.real())
       << ",\"im\":" << format_double(pa.result.amplitude.imag())
       << "},\"probability\":" << format_double(pa.result.probability) << '}';
  }
  os << "]}\n";
  return os.good() ? kExitOk : kExitIo;
}

int cmd_sample(const SampleOptions& opt, std::ostream& os) {
  int j = 0;
  int k = 0;
  if (!bell_state_name(opt.state, &j, &k)) {
    return usage_error("sample expects --state bell00|bell01|bell10|bell11");
  }
  if (!angle_ok(opt.theta_deg)) {
    return usage_error("sample angle must lie in [0, 360)");
  }
  if (opt.n < 1) return usage_error("sample count must be at least 1");

  const DensityOperator rho = states::bell_projector(j, k);
  const double theta = bell::radians(opt.theta_deg);
  const samplers::CampaignResult result = samplers::campaign(
      rho, bell::xz_setup(theta, theta), opt.n, samplers::RngSeed{opt.seed});

  const struct {
    const char* a;
    const char* b;
    const samplers::PairStats& stats;
  } pairs[3] = {{"a", "b", result.stats.ab},
                {"a", "c", result.stats.ac},
                {"b", "c", result.stats.bc}};

  os << "{\"schema\":\"" << kSchema << "\",\"command\":\"sample\",\"state\":\""
     << opt.state << "\",\"theta_deg\":" << format_double(opt.theta_deg)
     << ",\"n\":" << opt.n << ",\"seed\":" << opt.seed << ",\"pairs\":[";
  for (int i = 0; i < 3; ++i) {
    if (i != 0) os << ',';
    os << "{\"setting_a\":\"" << pairs[i].a << "\",\"setting_b\":\"" << pairs[i].b
       << "\",\"e\":" << format_double(pairs[i].stats.e)
       << ",\"stderr\":" << format_double(pairs[i].stats.std_error) << '}';
  }
  os << "],\"sum\":" << format_double(result.sum)
     << ",\"sum_stderr\":" << format_double(result.sum_std_error)
     << ",\"bound\":" << format_double(result.report.bound)
     << ",\"violated\":" << json_bool(result.report.violated) << "}\n";
  return os.good() ? kExitOk : kExitIo;
}

int cmd_witness(const WitnessOptions& opt, std::ostream& os) {
  if (!(opt.p >= 0.0 && opt.p <= 1.0)) {
    return usage_error("witness mixing parameter must lie in [0, 1]");
  }
  const DensityOperator rho = states::werner(opt.p);
  const double expectation =
      separability::witness_expectation(separability::werner_witness(), rho);
  const separability::PptVerdict verdict = separability::ppt_check(rho);
  os << "{\"schema\":\"" << kSchema << "\",\"command\":\"witness\",\"p\":"
     << format_double(opt.p) << ",\"expectation\":" << format_double(expectation)
     << ",\"entangled_flag\":" << json_bool(expectation < 0.0)
     << ",\"ppt_verdict\":" << json_bool(verdict.ppt)
     << ",\"min_pt_eigenvalue\":" << format_double(verdict.min_pt_eigenvalue)
     << "}\n";
  return os.good() ? kExitOk : kExitIo;
}

}  // namespace bellpigeon::cli
