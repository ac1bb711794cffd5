#include "bellpigeon/separability.hpp"

#include <vector>

namespace bellpigeon::separability {

using linalg::CMatrix;
using states::DensityOperator;

namespace {

constexpr double kPptFloor = -1e-10;

}  // namespace

PptVerdict ppt_check(const DensityOperator& rho) {
  if (rho.matrix().dim() != 4) {
    throw DimensionError("PPT criterion implemented for two-qubit states");
  }
  const CMatrix pt =
      linalg::partial_transpose(rho.matrix(), linalg::Subsystem::second);
  const std::vector<double> eigs = linalg::eigenvalues(pt);
  const double min_eig = eigs.front();
  return PptVerdict{min_eig, min_eig >= kPptFloor};
}

double vanishing_trace(int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3) {
    throw RangeError("Pauli index must be 0..3");
  }
  return 0.25 *
         linalg::trace(linalg::mul(states::pauli_pair(i, i), states::pauli_pair(j, j)))
             .real();
}

std::array<std::array<double, 4>, 2> zero_event_table() {
  const states::DensityOperator rows[2] = {
      states::rho_family(states::Axis::y, states::Sign::plus),
      states::rho_family(states::Axis::y, states::Sign::minus),
  };
  const int bell_order[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::array<std::array<double, 4>, 2> table{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      const states::DensityOperator proj =
          states::bell_projector(bell_order[c][0], bell_order[c][1]);
      table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          linalg::trace(linalg::mul(rows[r].matrix(), proj.matrix())).real();
    }
  }
  return table;
}

Witness werner_witness() {
  const CMatrix w = 0.25 * (states::pauli_pair(0, 0) + states::pauli_pair(3, 3) +
                            states::pauli_pair(1, 1) + states::pauli_pair(2, 2));
  return Witness{w, "werner"};
}

double witness_expectation(const Witness& w, const DensityOperator& rho) {
  if (w.matrix.dim() != rho.matrix().dim()) {
    throw DimensionError("witness dimension does not match state");
  }
  return linalg::trace(linalg::mul(w.matrix, rho.matrix())).real();
}

double werner_ppt_threshold(double interval_width) {
  if (!(interval_width > 0.0)) {
    throw RangeError("bisection interval width must be positive");
  }
  double lo = 0.0;   // werner(0) = I/4 is PPT
  double hi = 1.0;   // werner(1) is a Bell projector, not PPT
  while (hi - lo > interval_width) {
    const double mid = 0.5 * (lo + hi);
    if (ppt_check(states::werner(mid)).ppt) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bellpigeon::separability
