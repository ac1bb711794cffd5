#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "bellpigeon/errors.hpp"

namespace bellpigeon::linalg {

using Complex = std::complex<double>;

// Dense complex column vector. Entries are checked finite at construction
// and never mutated afterwards; every operation returns a fresh value.
class CVector {
 public:
  explicit CVector(std::size_t dim);  // zero vector
  explicit CVector(std::vector<Complex> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  friend bool operator==(const CVector& a, const CVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Complex> entries_;
};

// Dense square complex matrix, row-major. Same value semantics as CVector.
class CMatrix {
 public:
  CMatrix(std::size_t dim, std::vector<Complex> entries);
  static CMatrix zero(std::size_t dim);
  static CMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator*(Complex scale, const CVector& v);
CVector operator*(double scale, const CVector& v);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, const CMatrix& m);
CMatrix operator*(double scale, const CMatrix& m);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& m, const CVector& v);

// Kronecker product. Row index of the result is r_a * dim(b) + r_b: the
// left factor is the most significant, matching the basis order used for
// multi-qubit states throughout.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& m);
Complex trace(const CMatrix& m);
// Conjugate-linear in the first argument: inner(u, v) = sum conj(u_i) v_i.
Complex inner(const CVector& u, const CVector& v);
// outer(u, v)[r][c] = u_r * conj(v_c), i.e. the operator |u><v|.
CMatrix outer(const CVector& u, const CVector& v);
CVector apply(const CMatrix& m, const CVector& v);

double norm2(const CVector& v);
double max_norm(const CVector& v);
double max_norm(const CMatrix& m);
double max_abs_diff(const CVector& a, const CVector& b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
// max |m(r,c) - conj(m(c,r))| over all entries.
double hermiticity_residual(const CMatrix& m);

struct EigenPair {
  double eigenvalue;
  CVector eigenvector;
};

// Full eigensystem of a Hermitian matrix by cyclic Jacobi rotations.
// Returns pairs sorted by ascending eigenvalue with orthonormal
// eigenvectors. Intended for the small dimensions used here (<= 16);
// robustness is preferred over asymptotic speed.
//
// Throws HermitianityError when ||m - adjoint(m)||_max > tol and
// ConvergenceError when the off-diagonal maximum is not brought below
// tol * max(1, ||m||_max) within the sweep cap.
std::vector<EigenPair> hermitian_eigensystem(const CMatrix& m,
                                             double tol = 1e-12);
// Eigenvalues only, ascending.
std::vector<double> eigenvalues(const CMatrix& m, double tol = 1e-12);

enum class Subsystem { first = 1, second = 2 };

// Partial transposition of a two-qubit operator (dim 4 only). With basis
// index r = 2a + b, transposing the second subsystem swaps b between row
// and column; transposing the first swaps a.
CMatrix partial_transpose(const CMatrix& m, Subsystem subsystem);

}  // namespace bellpigeon::linalg
