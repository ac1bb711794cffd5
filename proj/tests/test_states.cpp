#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>

#include "bellpigeon/errors.hpp"
#include "bellpigeon/linalg.hpp"
#include "bellpigeon/states.hpp"
#include "test_util.hpp"

using namespace bellpigeon;
using linalg::Complex;
using linalg::CMatrix;
using linalg::CVector;

TEST_CASE("named single-qubit kets have their textbook amplitudes") {
  const double s = 1.0 / std::sqrt(2.0);

  const auto zero = states::ket_basic("zero");
  CHECK(zero.amplitudes()[0] == Complex(1, 0));
  CHECK(zero.amplitudes()[1] == Complex(0, 0));

  const auto one = states::ket_basic("one");
  CHECK(one.amplitudes()[0] == Complex(0, 0));
  CHECK(one.amplitudes()[1] == Complex(1, 0));

  const auto plus = states::ket_basic("plus");
  CHECK(std::abs(plus.amplitudes()[0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(plus.amplitudes()[1] - Complex(s, 0)) < 1e-15);

  const auto plus_i = states::ket_basic("plus_i");
  CHECK(std::abs(plus_i.amplitudes()[0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(plus_i.amplitudes()[1] - Complex(0, s)) < 1e-15);

  const auto minus_i = states::ket_basic("minus_i");
  CHECK(std::abs(minus_i.amplitudes()[0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(minus_i.amplitudes()[1] - Complex(0, -s)) < 1e-15);

  CHECK_THROWS_AS(states::ket_basic("minus"), NameError);
}

TEST_CASE("basis layout puts the first qubit in the most significant bit") {
  const auto ket01 = states::tensor(states::ket_basic("zero"),
                                    states::ket_basic("one"));
  CHECK(ket01.amplitudes()[1] == Complex(1, 0));
  const auto ket10 = states::tensor(states::ket_basic("one"),
                                    states::ket_basic("zero"));
  CHECK(ket10.amplitudes()[2] == Complex(1, 0));
}

TEST_CASE("the four maximally entangled states are orthonormal") {
  const std::array<states::Ket, 4> basis = {states::bell(0, 0),
                                            states::bell(0, 1),
                                            states::bell(1, 0),
                                            states::bell(1, 1)};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const Complex g = states::inner(basis[a], basis[b]);
      const double want = (a == b) ? 1.0 : 0.0;
      CHECK(std::abs(g - want) < 1e-15);
    }
  }
}

TEST_CASE("entangled-basis amplitudes match the sign conventions") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto b00 = states::bell(0, 0).amplitudes();
  CHECK(std::abs(b00[0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(b00[3] - Complex(s, 0)) < 1e-15);
  const auto b10 = states::bell(1, 0).amplitudes();
  CHECK(std::abs(b10[0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(b10[3] - Complex(-s, 0)) < 1e-15);
  const auto b01 = states::bell(0, 1).amplitudes();
  CHECK(std::abs(b01[1] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(b01[2] - Complex(s, 0)) < 1e-15);
  const auto b11 = states::bell(1, 1).amplitudes();
  CHECK(std::abs(b11[1] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(b11[2] - Complex(-s, 0)) < 1e-15);
  CHECK_THROWS_AS(states::bell(2, 0), RangeError);
}

TEST_CASE("circular-basis product states resolve the identity") {
  CMatrix sum = CMatrix::zero(4);
  for (int k = 1; k <= 4; ++k) {
    const auto phi = states::postselected(k);
    sum = sum + linalg::outer(phi.amplitudes(), phi.amplitudes());
  }
  CHECK(linalg::max_abs_diff(sum, CMatrix::identity(4)) < 1e-14);
  CHECK_THROWS_AS(states::postselected(0), NameError);
  CHECK_THROWS_AS(states::postselected(5), NameError);
}

TEST_CASE("circular product states are built from the single-qubit pair") {
  const auto p = states::ket_basic("plus_i");
  const auto m = states::ket_basic("minus_i");
  const std::array<states::Ket, 4> expect = {
      states::tensor(p, p), states::tensor(p, m), states::tensor(m, p),
      states::tensor(m, m)};
  for (int k = 1; k <= 4; ++k) {
    const auto phi = states::postselected(k);
    CHECK(std::abs(states::inner(expect[k - 1], phi) - Complex(1, 0)) < 1e-14);
  }
}

TEST_CASE("density operators validate their defining properties") {
  // Non-Hermitian.
  CHECK_THROWS_AS(states::DensityOperator(1, CMatrix(2, {0.5, 0.5, 0, 0.5})),
                  InvariantError);
  // Wrong trace.
  CHECK_THROWS_AS(states::DensityOperator(1, CMatrix::identity(2)),
                  InvariantError);
  // Negative eigenvalue: diag(1.5, -0.5).
  CHECK_THROWS_AS(states::DensityOperator(1, CMatrix(2, {1.5, 0, 0, -0.5})),
                  InvariantError);
  // A valid projector passes.
  const auto rho = states::from_ket(states::bell(0, 0));
  CHECK(std::abs(linalg::trace(rho.matrix()) - Complex(1, 0)) < 1e-14);
}

TEST_CASE("ket construction enforces the unit norm") {
  CHECK_THROWS_AS(states::Ket(1, CVector(std::vector<Complex>{1.0, 1.0})),
                  InvariantError);
}

TEST_CASE("projectors onto the entangled basis are idempotent") {
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const CMatrix p = states::bell_projector(j, k).matrix();
      CHECK(linalg::max_abs_diff(p * p, p) < 1e-15);
      CHECK(std::abs(linalg::trace(p) - Complex(1, 0)) < 1e-15);
    }
  }
}

TEST_CASE("equal mixtures of entangled pairs rebuild the correlated family") {
  using states::Axis;
  using states::Sign;
  struct Row {
    Axis axis;
    Sign sign;
    int j1, k1, j2, k2;
  };
  // Each family member is an equal mixture of exactly two basis projectors.
  const Row rows[] = {
      {Axis::z, Sign::plus, 0, 0, 1, 0},  {Axis::x, Sign::plus, 0, 0, 0, 1},
      {Axis::y, Sign::plus, 0, 1, 1, 0},  {Axis::y, Sign::minus, 0, 0, 1, 1},
      {Axis::x, Sign::minus, 1, 0, 1, 1}, {Axis::z, Sign::minus, 0, 1, 1, 1},
  };
  for (const Row& row : rows) {
    const CMatrix mix = 0.5 * (states::bell_projector(row.j1, row.k1).matrix() +
                               states::bell_projector(row.j2, row.k2).matrix());
    const CMatrix fam = states::rho_family(row.axis, row.sign).matrix();
    CHECK(linalg::max_abs_diff(mix, fam) < 1e-15);
  }
}

TEST_CASE("family members equal the closed form with the axis operator") {
  using states::Axis;
  using states::Sign;
  for (const Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const CMatrix aa = states::pauli_pair(static_cast<int>(axis),
                                          static_cast<int>(axis));
    const CMatrix id = CMatrix::identity(4);
    const CMatrix plus = 0.25 * (id + aa);
    const CMatrix minus = 0.25 * (id - aa);
    CHECK(linalg::max_abs_diff(states::rho_family(axis, Sign::plus).matrix(),
                               plus) < 1e-15);
    CHECK(linalg::max_abs_diff(states::rho_family(axis, Sign::minus).matrix(),
                               minus) < 1e-15);
  }
}

TEST_CASE("isotropic mixture interpolates between noise and pure entanglement") {
  const auto w0 = states::werner(0.0);
  CHECK(linalg::max_abs_diff(w0.matrix(), 0.25 * CMatrix::identity(4)) < 1e-15);
  const auto w1 = states::werner(1.0);
  CHECK(linalg::max_abs_diff(w1.matrix(), states::bell_projector(1, 1).matrix()) <
        1e-15);
  CHECK_THROWS_AS(states::werner(-0.01), RangeError);
  CHECK_THROWS_AS(states::werner(1.01), RangeError);
}

TEST_CASE("pauli pair operators are trace-orthogonal") {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          const Complex t =
              linalg::trace(states::pauli_pair(i, j) * states::pauli_pair(k, l));
          const double want = (i == k && j == l) ? 4.0 : 0.0;
          CHECK(std::abs(t - want) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("coefficient extraction round-trips random Hermitian operators") {
  testutil::Rng rng(201);
  for (int rep = 0; rep < 25; ++rep) {
    const CMatrix h = testutil::random_hermitian(rng, 4);
    const states::PauliTensor t = states::to_pauli(h);
    const CMatrix back = states::from_pauli(t);
    CHECK(linalg::max_abs_diff(back, h) < 1e-12);
  }
  CHECK_THROWS_AS(states::to_pauli(CMatrix(4, std::vector<Complex>(
                                                  16, Complex(0, 1)))),
                  HermitianityError);
}

TEST_CASE("entangled projectors have the expected correlation coefficients") {
  const states::PauliTensor t00 =
      states::to_pauli(states::bell_projector(0, 0).matrix());
  CHECK(t00.c[0][0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(t00.c[3][3] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(t00.c[1][1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(t00.c[2][2] == doctest::Approx(-0.25).epsilon(1e-14));

  const states::PauliTensor t11 =
      states::to_pauli(states::bell_projector(1, 1).matrix());
  CHECK(t11.c[0][0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(t11.c[3][3] == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(t11.c[1][1] == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(t11.c[2][2] == doctest::Approx(-0.25).epsilon(1e-14));

  // All single-qubit marginals of the entangled basis vanish.
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const states::PauliTensor t =
          states::to_pauli(states::bell_projector(j, k).matrix());
      for (int i = 1; i < 4; ++i) {
        CHECK(std::abs(t.c[i][0]) < 1e-14);
        CHECK(std::abs(t.c[0][i]) < 1e-14);
      }
    }
  }
}

TEST_CASE("qubit rotation conjugates the spin observable as a 3-vector") {
  // U = exp(-i theta Y / 2) rotates Z into cos(theta) Z + sin(theta) X.
  testutil::Rng rng(202);
  for (int rep = 0; rep < 10; ++rep) {
    const double theta = rng.uniform(0.0, 3.14159);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const CMatrix u(2, {Complex(c, 0), Complex(-s, 0), Complex(s, 0),
                        Complex(c, 0)});
    const CMatrix rotated = u * states::pauli(3) * linalg::adjoint(u);
    const CMatrix want = std::cos(theta) * states::pauli(3) +
                         std::sin(theta) * states::pauli(1);
    CHECK(linalg::max_abs_diff(rotated, want) < 1e-14);
  }
}

TEST_CASE("maximally mixed operator is the scaled identity") {
  const auto mm = states::maximally_mixed(2);
  CHECK(linalg::max_abs_diff(mm.matrix(), 0.25 * CMatrix::identity(4)) == 0.0);
}
