#pragma once

#include <array>
#include <string>

#include "bellpigeon/states.hpp"

namespace bellpigeon::separability {

struct PptVerdict {
  double min_pt_eigenvalue;
  bool ppt;  // min_pt_eigenvalue >= -1e-10
};

// Transposes the second subsystem and inspects the spectrum. For two
// qubits a positive partial transpose is equivalent to separability.
PptVerdict ppt_check(const states::DensityOperator& rho);

// (1/4) Re tr((sigma_i (x) sigma_i)(sigma_j (x) sigma_j)); equals
// delta_ij, which is what makes one Bell projector orthogonal to each
// member of the separable family.
double vanishing_trace(int i, int j);

// tr(rho_Y^{+/-} . bell projector) for the four Bell projectors in the
// order bell(0,0), bell(0,1), bell(1,0), bell(1,1); row 0 is the plus
// sign. Each row sums to 1 and holds two exact zeros.
std::array<std::array<double, 4>, 2> zero_event_table();

struct Witness {
  linalg::CMatrix matrix;
  std::string name;
};

// W = (1/4)(II + ZZ + XX + YY): nonnegative on every separable state,
// negative on Werner states past the separability threshold.
Witness werner_witness();

double witness_expectation(const Witness& w, const states::DensityOperator& rho);

// Bisection for the p where werner(p) stops being PPT; the interval is
// narrowed below `interval_width` and the midpoint returned.
double werner_ppt_threshold(double interval_width = 1e-8);

}  // namespace bellpigeon::separability
