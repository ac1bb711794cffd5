#include "bellpigeon/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace bellpigeon::bell {

using linalg::CMatrix;
using states::DensityOperator;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDirectionTol = 1e-9;
constexpr double kViolationMargin = 1e-10;
constexpr double kCorrelationClamp = 1.0 + 1e-10;
constexpr double kAngleSlack = 1e-12;

void require_two_qubits(const DensityOperator& rho) {
  if (rho.matrix().dim() != 4) {
    throw DimensionError("correlations are defined for two-qubit states");
  }
}

void require_angle_in_0_pi(double angle, const char* what) {
  if (!(angle >= -kAngleSlack && angle <= kPi + kAngleSlack)) {
    throw RangeError(what);
  }
}

// Minimizes fn over [lo, hi] by golden-section search.
double golden_min(const std::function<double(double)>& fn, double lo, double hi,
                  double tol) {
  constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = fn(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Direction3::Direction3(double x, double y, double z) : x(x), y(y), z(z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > kDirectionTol) {
    throw NormError("direction must be a unit vector");
  }
}

Direction3 xz_direction(double angle) {
  return Direction3(std::sin(angle), 0.0, std::cos(angle));
}

double dot(const Direction3& a, const Direction3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

MeasurementSetup xz_setup(double alpha, double beta) {
  return MeasurementSetup{Direction3(0.0, 0.0, 1.0), xz_direction(alpha),
                          xz_direction(-beta)};
}

CMatrix spin_observable(const Direction3& d) {
  return d.x * states::pauli(1) + d.y * states::pauli(2) + d.z * states::pauli(3);
}

double correlation(const DensityOperator& rho, const Direction3& da,
                   const Direction3& db) {
  require_two_qubits(rho);
  const CMatrix ab = linalg::tensor(spin_observable(da), spin_observable(db));
  const double value = linalg::trace(linalg::mul(rho.matrix(), ab)).real();
  return std::clamp(value, -kCorrelationClamp, kCorrelationClamp);
}

double pigeonhole_sum(const DensityOperator& rho, const MeasurementSetup& setup) {
  return correlation(rho, setup.a, setup.b) + correlation(rho, setup.a, setup.c) +
         correlation(rho, setup.b, setup.c);
}

std::string_view inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::pigeon_lower: return "pigeon_lower";
    case InequalityId::pigeon_upper: return "pigeon_upper";
    case InequalityId::chsh: return "chsh";
    case InequalityId::original_bell: return "original_bell";
  }
  throw RangeError("unknown inequality id");
}

double classical_bound(InequalityId id) {
  switch (id) {
    case InequalityId::pigeon_lower: return -1.0;
    case InequalityId::pigeon_upper: return 1.0;
    case InequalityId::chsh: return 2.0;
    case InequalityId::original_bell: return 1.0;
  }
  throw RangeError("unknown inequality id");
}

ViolationReport evaluate_inequality(InequalityId id, const DensityOperator& rho,
                                    const std::vector<Direction3>& settings) {
  const std::size_t expected = (id == InequalityId::chsh) ? 4 : 3;
  if (settings.size() != expected) {
    throw ArityError("inequality settings count does not match its form");
  }

  double value = 0.0;
  bool violated = false;
  const double bound = classical_bound(id);
  switch (id) {
    case InequalityId::pigeon_lower: {
      const MeasurementSetup s{settings[0], settings[1], settings[2]};
      value = pigeonhole_sum(rho, s);
      violated = value < bound - kViolationMargin;
      break;
    }
    case InequalityId::pigeon_upper: {
      const MeasurementSetup s{settings[0], settings[1], settings[2]};
      value = pigeonhole_sum(rho, s);
      violated = value > bound + kViolationMargin;
      break;
    }
    case InequalityId::chsh: {
      const Direction3& a = settings[0];
      const Direction3& ap = settings[1];
      const Direction3& b = settings[2];
      const Direction3& bp = settings[3];
      value = correlation(rho, a, b) + correlation(rho, a, bp) +
              correlation(rho, ap, b) - correlation(rho, ap, bp);
      violated = std::abs(value) > bound + kViolationMargin;
      break;
    }
    case InequalityId::original_bell: {
      value = correlation(rho, settings[0], settings[1]) -
              correlation(rho, settings[0], settings[2]) -
              correlation(rho, settings[1], settings[2]);
      violated = value > bound + kViolationMargin;
      break;
    }
  }
  return ViolationReport{id, value, bound, violated, settings};
}

CMatrix bell_operator(const MeasurementSetup& setup) {
  const CMatrix sa = spin_observable(setup.a);
  const CMatrix sb = spin_observable(setup.b);
  const CMatrix sc = spin_observable(setup.c);
  return linalg::tensor(sa, sb) + linalg::tensor(sa, sc) + linalg::tensor(sb, sc);
}

states::PauliTensor reduced_bell_operator(double alpha, double beta) {
  require_angle_in_0_pi(alpha, "reduced operator angle alpha must lie in [0, pi]");
  require_angle_in_0_pi(beta, "reduced operator angle beta must lie in [0, pi]");
  states::PauliTensor t;
  t.c[3][3] = std::cos(alpha) + std::cos(beta) + std::cos(alpha) * std::cos(beta);
  t.c[1][1] = -std::sin(alpha) * std::sin(beta);
  return t;
}

double f_objective(double alpha, double beta) {
  return std::cos(alpha) + std::cos(beta) + std::cos(alpha) * std::cos(beta) -
         std::sin(alpha) * std::sin(beta);
}

FMinimum minimize_F(double grid_step, double refine_tol) {
  if (!(grid_step > 0.0) || grid_step > radians(1.0) + kAngleSlack) {
    throw RangeError("grid step must be positive and at most one degree");
  }
  if (!(refine_tol > 0.0)) throw RangeError("refinement tolerance must be positive");

  double best_a = 0.0;
  double best_b = 0.0;
  double best_v = f_objective(0.0, 0.0);
  const auto steps = static_cast<std::size_t>(kPi / grid_step + 1e-9);
  for (std::size_t ia = 0; ia <= steps; ++ia) {
    const double a = std::min(ia * grid_step, kPi);
    for (std::size_t ib = 0; ib <= steps; ++ib) {
      const double b = std::min(ib * grid_step, kPi);
      const double v = f_objective(a, b);
      if (v < best_v) {  // strict: ascending scan order keeps the lowest (a, b)
        best_v = v;
        best_a = a;
        best_b = b;
      }
    }
  }

  for (int round = 0; round < 5; ++round) {
    best_a = golden_min(
        [&best_b](double a) { return f_objective(a, best_b); },
        std::max(0.0, best_a - grid_step), std::min(kPi, best_a + grid_step),
        refine_tol);
    best_b = golden_min(
        [&best_a](double b) { return f_objective(best_a, b); },
        std::max(0.0, best_b - grid_step), std::min(kPi, best_b + grid_step),
        refine_tol);
  }
  return FMinimum{best_a, best_b, f_objective(best_a, best_b)};
}

ScanPoint scan_point(const DensityOperator& rho, double theta) {
  const double ezz =
      correlation(rho, Direction3(0.0, 0.0, 1.0), Direction3(0.0, 0.0, 1.0));
  const double exx =
      correlation(rho, Direction3(1.0, 0.0, 0.0), Direction3(1.0, 0.0, 0.0));
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double zz = (2.0 * ct + ct * ct) * ezz;
  const double xx = -(st * st) * exx;
  return ScanPoint{theta, zz + xx, zz, xx};
}

std::vector<ScanPoint> scan_curve(const DensityOperator& rho, double theta_min,
                                  double theta_max, double step) {
  if (!(step > 0.0)) throw RangeError("scan step must be positive");
  std::vector<ScanPoint> points;
  const double limit = theta_max + step * 1e-9;
  for (std::size_t k = 0;; ++k) {
    const double theta = theta_min + k * step;
    if (theta > limit) break;
    points.push_back(scan_point(rho, theta));
  }
  return points;
}

CMatrix chsh_operator(const Direction3& a, const Direction3& a_prime,
                      const Direction3& b, const Direction3& b_prime) {
  const CMatrix sb = spin_observable(b);
  const CMatrix sbp = spin_observable(b_prime);
  return linalg::tensor(spin_observable(a), sb + sbp) +
         linalg::tensor(spin_observable(a_prime), sb - sbp);
}

CMatrix chsh_max_form() {
  return std::sqrt(2.0) * (states::pauli_pair(3, 3) + states::pauli_pair(1, 1));
}

}  // namespace bellpigeon::bell
