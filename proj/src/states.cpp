#include "bellpigeon/states.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace bellpigeon::states {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kPauliHermTol = 1e-10;

const Complex kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t qubit_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 62) {
    throw RangeError("qubit count out of range");
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

Ket::Ket(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.dim() != qubit_dim(n_qubits_)) {
    throw DimensionError("ket dimension does not match qubit count");
  }
  if (std::abs(linalg::norm2(amplitudes_) - 1.0) > kNormTol) {
    throw InvariantError("ket is not normalized");
  }
}

DensityOperator::DensityOperator(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (matrix_.dim() != qubit_dim(n_qubits_)) {
    throw DimensionError("density operator dimension does not match qubit count");
  }
  if (linalg::hermiticity_residual(matrix_) > kHermTol) {
    throw InvariantError("density operator is not Hermitian");
  }
  if (std::abs(linalg::trace(matrix_) - Complex(1.0, 0.0)) > kTraceTol) {
    throw InvariantError("density operator trace is not 1");
  }
  const std::vector<double> eigs = linalg::eigenvalues(matrix_);
  if (eigs.front() < kEigenFloor) {
    throw InvariantError("density operator has a negative eigenvalue");
  }
}

const CMatrix& pauli(int i) {
  static const std::array<CMatrix, 4> sigmas = {
      CMatrix(2, {1.0, 0.0, 0.0, 1.0}),
      CMatrix(2, {0.0, 1.0, 1.0, 0.0}),
      CMatrix(2, {0.0, -kI, kI, 0.0}),
      CMatrix(2, {1.0, 0.0, 0.0, -1.0}),
  };
  if (i < 0 || i > 3) throw RangeError("Pauli index must be 0..3");
  return sigmas[static_cast<std::size_t>(i)];
}

CMatrix pauli_pair(int i, int j) { return linalg::tensor(pauli(i), pauli(j)); }

Ket ket_basic(std::string_view name) {
  if (name == "zero") return Ket(1, CVector({1.0, 0.0}));
  if (name == "one") return Ket(1, CVector({0.0, 1.0}));
  if (name == "plus") return Ket(1, CVector({kInvSqrt2, kInvSqrt2}));
  if (name == "plus_i") return Ket(1, CVector({kInvSqrt2, kI * kInvSqrt2}));
  if (name == "minus_i") return Ket(1, CVector({kInvSqrt2, -kI * kInvSqrt2}));
  throw NameError("unknown basic ket: " + std::string(name));
}

Ket tensor(const Ket& a, const Ket& b) {
  return Ket(a.n_qubits() + b.n_qubits(),
             linalg::tensor(a.amplitudes(), b.amplitudes()));
}

Complex inner(const Ket& a, const Ket& b) {
  return linalg::inner(a.amplitudes(), b.amplitudes());
}

Ket bell(int j, int k) {
  if ((j != 0 && j != 1) || (k != 0 && k != 1)) {
    throw RangeError("Bell indices must be 0 or 1");
  }
  std::vector<Complex> e(4, Complex(0.0, 0.0));
  e[static_cast<std::size_t>(k)] = kInvSqrt2;                // |0 k>
  e[static_cast<std::size_t>(2 + (1 - k))] =                 // |1 1-k>
      (j == 0) ? Complex(kInvSqrt2, 0.0) : Complex(-kInvSqrt2, 0.0);
  return Ket(2, CVector(std::move(e)));
}

Ket postselected(int k) {
  const Ket plus_i = ket_basic("plus_i");
  const Ket minus_i = ket_basic("minus_i");
  switch (k) {
    case 1: return tensor(plus_i, plus_i);
    case 2: return tensor(plus_i, minus_i);
    case 3: return tensor(minus_i, plus_i);
    case 4: return tensor(minus_i, minus_i);
    default: throw NameError("postselection index must be 1..4");
  }
}

DensityOperator from_ket(const Ket& k) {
  return DensityOperator(k.n_qubits(),
                         linalg::outer(k.amplitudes(), k.amplitudes()));
}

DensityOperator bell_projector(int j, int k) { return from_ket(bell(j, k)); }

DensityOperator maximally_mixed(int n_qubits) {
  const std::size_t d = qubit_dim(n_qubits);
  return DensityOperator(n_qubits,
                         (1.0 / static_cast<double>(d)) * CMatrix::identity(d));
}

DensityOperator rho_family(Axis axis, Sign sign) {
  const int a = static_cast<int>(axis);
  const double s = (sign == Sign::plus) ? 1.0 : -1.0;
  const CMatrix m = 0.25 * (pauli_pair(0, 0) + s * pauli_pair(a, a));
  return DensityOperator(2, m);
}

DensityOperator werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw RangeError("Werner mixing parameter must lie in [0, 1]");
  }
  const Ket b11 = bell(1, 1);
  const CMatrix m = p * linalg::outer(b11.amplitudes(), b11.amplitudes()) +
                    (0.25 * (1.0 - p)) * CMatrix::identity(4);
  return DensityOperator(2, m);
}

PauliTensor to_pauli(const linalg::CMatrix& m) {
  if (m.dim() != 4) throw DimensionError("Pauli expansion requires a 4x4 operator");
  if (linalg::hermiticity_residual(m) > kPauliHermTol) {
    throw HermitianityError("Pauli expansion requires a Hermitian operator");
  }
  PauliTensor t;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          0.25 * linalg::trace(linalg::mul(pauli_pair(i, j), m)).real();
    }
  }
  return t;
}

linalg::CMatrix from_pauli(const PauliTensor& t) {
  CMatrix m = CMatrix::zero(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double cij = t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (cij == 0.0) continue;
      m = m + cij * pauli_pair(i, j);
    }
  }
  return m;
}

}  // namespace bellpigeon::states
