#pragma once

#include <numbers>
#include <string_view>
#include <vector>

#include "bellpigeon/states.hpp"

namespace bellpigeon::bell {

constexpr double radians(double degrees) {
  return degrees * (std::numbers::pi / 180.0);
}
constexpr double degrees(double rad) { return rad * (180.0 / std::numbers::pi); }

// Unit vector on the Bloch sphere; construction rejects non-unit input.
struct Direction3 {
  double x;
  double y;
  double z;
  Direction3(double x, double y, double z);
};

// Direction in the XZ plane at `angle` from the z axis: (sin a, 0, cos a).
Direction3 xz_direction(double angle);
double dot(const Direction3& a, const Direction3& b);

// Three analyzer directions; a pigeonhole test correlates every pair.
struct MeasurementSetup {
  Direction3 a;
  Direction3 b;
  Direction3 c;
};

// a on the z axis, b at +alpha, c at -beta, all in the XZ plane.
MeasurementSetup xz_setup(double alpha, double beta);

// d . sigma.
linalg::CMatrix spin_observable(const Direction3& d);

// Re tr(rho (a.sigma (x) b.sigma)), clamped to [-1 - 1e-10, 1 + 1e-10].
double correlation(const states::DensityOperator& rho, const Direction3& da,
                   const Direction3& db);

// E(a,b) + E(a,c) + E(b,c).
double pigeonhole_sum(const states::DensityOperator& rho,
                      const MeasurementSetup& setup);

enum class InequalityId {
  pigeon_lower,   // E(a,b) + E(a,c) + E(b,c) >= -1
  pigeon_upper,   // E(a,b) + E(a,c) + E(b,c) <= 1
  chsh,           // |E(a,b) + E(a,b') + E(a',b) - E(a',b')| <= 2
  original_bell,  // E(a,b) - E(a,c) - E(b,c) <= 1
};

std::string_view inequality_name(InequalityId id);
double classical_bound(InequalityId id);

struct ViolationReport {
  InequalityId inequality;
  double value;
  double bound;
  bool violated;
  std::vector<Direction3> settings;
};

// settings order: (a, b, c) for the three-direction forms and
// (a, a', b, b') for chsh. Wrong count -> ArityError. A report counts as
// violated only when the value lands beyond the bound by more than 1e-10.
ViolationReport evaluate_inequality(InequalityId id,
                                    const states::DensityOperator& rho,
                                    const std::vector<Direction3>& settings);

// a.sigma (x) b.sigma + a.sigma (x) c.sigma + b.sigma (x) c.sigma.
linalg::CMatrix bell_operator(const MeasurementSetup& setup);

// For the XZ-plane geometry of xz_setup the three-setting operator reduces
// to (cos a + cos b + cos a cos b) ZZ - sin a sin b XX plus ZX/XZ cross
// terms whose expectation vanishes on Bell-diagonal states. Returns the
// diagonal part as Pauli coefficients; angles must lie in [0, pi].
states::PauliTensor reduced_bell_operator(double alpha, double beta);

// F(a, b) = cos a + cos b + cos a cos b - sin a sin b, the expectation of
// the reduced operator on bell(0,0).
double f_objective(double alpha, double beta);

struct FMinimum {
  double alpha;
  double beta;
  double value;
};

// Grid scan of f_objective over [0, pi]^2 (ties break toward the lowest
// alpha, then beta) followed by coordinate-descent golden-section
// refinement until both bracket widths drop below refine_tol.
FMinimum minimize_F(double grid_step = radians(0.5), double refine_tol = 1e-9);

struct ScanPoint {
  double theta;  // radians
  double total;
  double zz_part;
  double xx_part;
};

// Expectation of the reduced operator at alpha = beta = theta, split into
// its ZZ and XX contributions.
ScanPoint scan_point(const states::DensityOperator& rho, double theta);
std::vector<ScanPoint> scan_curve(const states::DensityOperator& rho,
                                  double theta_min, double theta_max,
                                  double step);

// a.sigma (x) (b + b').sigma + a'.sigma (x) (b - b').sigma.
linalg::CMatrix chsh_operator(const Direction3& a, const Direction3& a_prime,
                              const Direction3& b, const Direction3& b_prime);
// sqrt(2) (ZZ + XX), the maximal-violation form.
linalg::CMatrix chsh_max_form();

}  // namespace bellpigeon::bell
