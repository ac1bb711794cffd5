#pragma once

#include <array>
#include <string_view>

#include "bellpigeon/linalg.hpp"

namespace bellpigeon::states {

// Basis convention used everywhere: the computational state |q1 q2 ... qn>
// maps to index sum_k q_k 2^(n-k), so the first (leftmost) qubit is the
// most significant bit. For two qubits, |ab> -> 2a + b.

// Normalized pure state on n qubits (||amplitudes|| = 1 within 1e-12).
class Ket {
 public:
  Ket(int n_qubits, linalg::CVector amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  const linalg::CVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  int n_qubits_;
  linalg::CVector amplitudes_;
};

// Density operator on n qubits: Hermitian within 1e-12, unit trace within
// 1e-12, and no eigenvalue below -1e-10.
class DensityOperator {
 public:
  DensityOperator(int n_qubits, linalg::CMatrix matrix);

  int n_qubits() const noexcept { return n_qubits_; }
  const linalg::CMatrix& matrix() const noexcept { return matrix_; }

 private:
  int n_qubits_;
  linalg::CMatrix matrix_;
};

// Real coefficients c[i][j] of a two-qubit Hermitian operator in the
// sigma_i (x) sigma_j basis, index order (I, X, Y, Z).
struct PauliTensor {
  std::array<std::array<double, 4>, 4> c{};
};

// sigma_0..sigma_3 = I, X, Y, Z.
const linalg::CMatrix& pauli(int i);
// sigma_i (x) sigma_j.
linalg::CMatrix pauli_pair(int i, int j);

// Named single-qubit states: zero, one, plus, plus_i, minus_i.
Ket ket_basic(std::string_view name);
Ket tensor(const Ket& a, const Ket& b);
linalg::Complex inner(const Ket& a, const Ket& b);

// Bell basis: bell(0,0) = (|00>+|11>)/sqrt2, bell(0,1) = (|01>+|10>)/sqrt2,
// bell(1,0) = (|00>-|11>)/sqrt2, bell(1,1) = (|01>-|10>)/sqrt2.
Ket bell(int j, int k);
// Two-qubit products of circular states, k = 1..4:
// |+i,+i>, |+i,-i>, |-i,+i>, |-i,-i>.
Ket postselected(int k);

DensityOperator from_ket(const Ket& k);
DensityOperator bell_projector(int j, int k);
DensityOperator maximally_mixed(int n_qubits);

enum class Axis { x = 1, y = 2, z = 3 };
enum class Sign { plus, minus };

// The separable family (1/4)(I(x)I +/- A(x)A) for A in {X, Y, Z}. Each
// member equals an equal mixture of two Bell projectors; tests pin the
// pairing.
DensityOperator rho_family(Axis axis, Sign sign);

// werner(p) = p |bell11><bell11| + (1-p) I/4, p in [0, 1].
DensityOperator werner(double p);

// c[i][j] = (1/4) Re tr((sigma_i (x) sigma_j) m); requires m Hermitian
// within 1e-10. from_pauli is the exact inverse expansion.
PauliTensor to_pauli(const linalg::CMatrix& m);
linalg::CMatrix from_pauli(const PauliTensor& t);

}  // namespace bellpigeon::states
