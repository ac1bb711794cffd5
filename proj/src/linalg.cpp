#include "bellpigeon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace bellpigeon::linalg {

namespace {

void require_finite(const std::vector<Complex>& entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvariantError("non-finite entry");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(what);
}

}  // namespace

CVector::CVector(std::size_t dim) : entries_(dim) {
  if (dim == 0) throw InvariantError("vector dimension must be at least 1");
}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvariantError("vector dimension must be at least 1");
  require_finite(entries_);
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw InvariantError("matrix dimension must be at least 1");
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("matrix entry count does not match dimension");
  }
  require_finite(entries_);
}

CMatrix CMatrix::zero(std::size_t dim) {
  return CMatrix(dim, std::vector<Complex>(dim * dim));
}

CMatrix CMatrix::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return CMatrix(dim, std::move(e));
}

CVector operator+(const CVector& a, const CVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector addition dimension mismatch");
  std::vector<Complex> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] + b[i];
  return CVector(std::move(e));
}

CVector operator-(const CVector& a, const CVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector subtraction dimension mismatch");
  std::vector<Complex> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] - b[i];
  return CVector(std::move(e));
}

CVector operator*(Complex scale, const CVector& v) {
  std::vector<Complex> e(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e[i] = scale * v[i];
  return CVector(std::move(e));
}

CVector operator*(double scale, const CVector& v) {
  return Complex(scale, 0.0) * v;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix addition dimension mismatch");
  std::vector<Complex> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] + b.entries()[i];
  return CMatrix(a.dim(), std::move(e));
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix subtraction dimension mismatch");
  std::vector<Complex> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] - b.entries()[i];
  return CMatrix(a.dim(), std::move(e));
}

CMatrix operator*(Complex scale, const CMatrix& m) {
  std::vector<Complex> e(m.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = scale * m.entries()[i];
  return CMatrix(m.dim(), std::move(e));
}

CMatrix operator*(double scale, const CMatrix& m) {
  return Complex(scale, 0.0) * m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mul(a, b); }

CVector operator*(const CMatrix& m, const CVector& v) { return apply(m, v); }

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  std::vector<Complex> e(d * d);
  for (std::size_t ra = 0; ra < da; ++ra) {
    for (std::size_t ca = 0; ca < da; ++ca) {
      for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
          e[(ra * db + rb) * d + (ca * db + cb)] = a(ra, ca) * b(rb, cb);
        }
      }
    }
  }
  return CMatrix(d, std::move(e));
}

CVector tensor(const CVector& a, const CVector& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  std::vector<Complex> e(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) e[i * db + j] = a[i] * b[j];
  }
  return CVector(std::move(e));
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product dimension mismatch");
  const std::size_t n = a.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) e[r * n + c] += ark * b(k, c);
    }
  }
  return CMatrix(n, std::move(e));
}

CMatrix adjoint(const CMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = std::conj(m(c, r));
  }
  return CMatrix(n, std::move(e));
}

Complex trace(const CMatrix& m) {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

Complex inner(const CVector& u, const CVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner product dimension mismatch");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

CMatrix outer(const CVector& u, const CVector& v) {
  require_same_dim(u.dim(), v.dim(), "outer product dimension mismatch");
  const std::size_t n = u.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = u[r] * std::conj(v[c]);
  }
  return CMatrix(n, std::move(e));
}

CVector apply(const CMatrix& m, const CVector& v) {
  require_same_dim(m.dim(), v.dim(), "matrix-vector dimension mismatch");
  const std::size_t n = m.dim();
  std::vector<Complex> e(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex s(0.0, 0.0);
    for (std::size_t c = 0; c < n; ++c) s += m(r, c) * v[c];
    e[r] = s;
  }
  return CVector(std::move(e));
}

double norm2(const CVector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += std::norm(v[i]);
  return std::sqrt(s);
}

double max_norm(const CVector& v) {
  double w = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) w = std::max(w, std::abs(v[i]));
  return w;
}

double max_norm(const CMatrix& m) {
  double w = 0.0;
  for (const Complex& z : m.entries()) w = std::max(w, std::abs(z));
  return w;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector comparison dimension mismatch");
  double w = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix comparison dimension mismatch");
  double w = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    w = std::max(w, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return w;
}

double hermiticity_residual(const CMatrix& m) {
  double w = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      w = std::max(w, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return w;
}

// Cyclic Jacobi for complex Hermitian matrices. Each pivot (p, q) is
// annihilated by a unitary plane rotation J with J[p][p] = J[q][q] = c
// (real), J[q][p] = s, J[p][q] = -conj(s). Writing a_pq = r e^{i phi},
// the choice s = sigma e^{-i phi} with tan parameter t = sigma / c
// solving t^2 - 2 tau t - 1 = 0, tau = (a_qq - a_pp) / (2 r), zeroes the
// pivot; the smaller-magnitude root keeps rotations well conditioned.
// Eigenvectors accumulate as columns of V = J_1 J_2 ... so that
// m = V diag(lambda) V^H on exit.
std::vector<EigenPair> hermitian_eigensystem(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw RangeError("eigensolver tolerance must be positive");
  if (hermiticity_residual(m) > tol) {
    throw HermitianityError("matrix is not Hermitian within tolerance");
  }

  const std::size_t n = m.dim();
  std::vector<Complex> a = m.entries();
  std::vector<Complex> v(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double scale = max_norm(m);
  const double threshold = tol * std::max(1.0, scale);

  const auto off_diag_max = [&a, n]() {
    double w = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        w = std::max(w, std::abs(a[p * n + q]));
      }
    }
    return w;
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diag_max() > threshold) {
    if (++sweep > kMaxSweeps) {
      throw ConvergenceError("Jacobi sweep cap reached before convergence");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r < 1e-300) {
          // Below any meaningful scale; annihilate outright.
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        const Complex phase = apq / r;
        const double tau = (a[q * n + q].real() - a[p * n + p].real()) / (2.0 * r);
        const double root = std::sqrt(1.0 + tau * tau);
        const double t = (tau >= 0.0) ? -1.0 / (tau + root) : 1.0 / (-tau + root);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * std::conj(phase);

        // B = A J on columns p, q.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a[i * n + p];
          const Complex aiq = a[i * n + q];
          a[i * n + p] = c * aip + s * aiq;
          a[i * n + q] = -std::conj(s) * aip + c * aiq;
        }
        // A' = J^H B on rows p, q.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a[p * n + j];
          const Complex aqj = a[q * n + j];
          a[p * n + j] = c * apj + std::conj(s) * aqj;
          a[q * n + j] = -s * apj + c * aqj;
        }
        // The pivot is zero by construction; diagonal stays real.
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = Complex(a[p * n + p].real(), 0.0);
        a[q * n + q] = Complex(a[q * n + q].real(), 0.0);
        // V <- V J.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v[i * n + p];
          const Complex viq = v[i * n + q];
          v[i * n + p] = c * vip + s * viq;
          v[i * n + q] = -std::conj(s) * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a, n](std::size_t lhs, std::size_t rhs) {
    return a[lhs * n + lhs].real() < a[rhs * n + rhs].real();
  });

  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col = order[k];
    std::vector<Complex> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = v[i * n + col];
    pairs.push_back(EigenPair{a[col * n + col].real(), CVector(std::move(vec))});
  }
  return pairs;
}

std::vector<double> eigenvalues(const CMatrix& m, double tol) {
  const std::vector<EigenPair> pairs = hermitian_eigensystem(m, tol);
  std::vector<double> vals;
  vals.reserve(pairs.size());
  for (const EigenPair& p : pairs) vals.push_back(p.eigenvalue);
  return vals;
}

CMatrix partial_transpose(const CMatrix& m, Subsystem subsystem) {
  if (m.dim() != 4) {
    throw DimensionError("partial transposition requires a two-qubit operator");
  }
  std::vector<Complex> e(16);
  for (std::size_t a1 = 0; a1 < 2; ++a1) {
    for (std::size_t b1 = 0; b1 < 2; ++b1) {
      for (std::size_t a2 = 0; a2 < 2; ++a2) {
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          const std::size_t r = 2 * a1 + b1;
          const std::size_t c = 2 * a2 + b2;
          const Complex src = (subsystem == Subsystem::second)
                                  ? m(2 * a1 + b2, 2 * a2 + b1)
                                  : m(2 * a2 + b1, 2 * a1 + b2);
          e[r * 4 + c] = src;
        }
      }
    }
  }
  return CMatrix(4, std::move(e));
}

}  // namespace bellpigeon::linalg
