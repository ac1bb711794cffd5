#include "bellpigeon/pigeonhole.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace bellpigeon::pigeonhole {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;
using states::Ket;

Projector projector(BoxLabel label) {
  std::vector<Complex> e(16, Complex(0.0, 0.0));
  if (label == BoxLabel::same) {
    e[0 * 4 + 0] = 1.0;   // |00><00|
    e[3 * 4 + 3] = 1.0;   // |11><11|
  } else {
    e[1 * 4 + 1] = 1.0;   // |01><01|
    e[2 * 4 + 2] = 1.0;   // |10><10|
  }
  return Projector{CMatrix(4, std::move(e)), label};
}

Ket collapse(const Ket& state, const Projector& p, double eps) {
  if (state.amplitudes().dim() != p.matrix.dim()) {
    throw DimensionError("projector dimension does not match state");
  }
  const CVector projected = linalg::apply(p.matrix, state.amplitudes());
  const double prob = linalg::inner(state.amplitudes(), projected).real();
  if (prob <= eps) {
    throw ZeroProbabilityError("selection probability vanishes");
  }
  return Ket(state.n_qubits(), (1.0 / std::sqrt(prob)) * projected);
}

double postselect_probability(const Ket& post, const Ket& state) {
  if (post.n_qubits() != state.n_qubits()) {
    throw DimensionError("postselection qubit count does not match state");
  }
  return std::norm(states::inner(post, state));
}

CVector apply_pair_operator(const CMatrix& op, QubitPair pair, const CVector& v,
                            int n_qubits) {
  if (op.dim() != 4) throw DimensionError("pair operator must be 4x4");
  if (n_qubits < 2) throw RangeError("pair operator needs at least two qubits");
  if (pair.i < 1 || pair.i >= pair.j || pair.j > n_qubits) {
    throw RangeError("qubit pair indices must satisfy 1 <= i < j <= n");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (v.dim() != dim) throw DimensionError("vector dimension does not match qubit count");

  const int si = n_qubits - pair.i;
  const int sj = n_qubits - pair.j;
  const std::size_t mask_i = std::size_t{1} << si;
  const std::size_t mask_j = std::size_t{1} << sj;

  std::vector<Complex> out(dim, Complex(0.0, 0.0));
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t bi = (x >> si) & 1u;
    const std::size_t bj = (x >> sj) & 1u;
    const std::size_t row = 2 * bi + bj;
    const std::size_t base = x & ~(mask_i | mask_j);
    Complex acc(0.0, 0.0);
    for (std::size_t bi2 = 0; bi2 < 2; ++bi2) {
      for (std::size_t bj2 = 0; bj2 < 2; ++bj2) {
        const Complex w = op(row, 2 * bi2 + bj2);
        if (w == Complex(0.0, 0.0)) continue;
        const std::size_t src = base | (bi2 ? mask_i : 0u) | (bj2 ? mask_j : 0u);
        acc += w * v[src];
      }
    }
    out[x] = acc;
  }
  return CVector(std::move(out));
}

SelectionResult pair_amplitude(int n_qubits, QubitPair pair, const Ket& pre,
                               const Ket& post, BoxLabel label) {
  if (pre.n_qubits() != n_qubits || post.n_qubits() != n_qubits) {
    throw DimensionError("pre/postselection qubit counts must match n");
  }
  const Projector p = projector(label);
  const CVector projected =
      apply_pair_operator(p.matrix, pair, pre.amplitudes(), n_qubits);
  const Complex amp = linalg::inner(post.amplitudes(), projected);
  return SelectionResult{amp, std::norm(amp)};
}

namespace {

Ket product_of(int n_qubits, const Ket& single) {
  Ket out = single;
  for (int k = 1; k < n_qubits; ++k) out = states::tensor(out, single);
  return out;
}

}  // namespace

Ket plus_product(int n_qubits) {
  return product_of(n_qubits, states::ket_basic("plus"));
}

Ket plus_i_product(int n_qubits) {
  return product_of(n_qubits, states::ket_basic("plus_i"));
}

std::vector<PairAmplitude> pigeonhole_report(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxParticles) {
    throw RangeError("particle count must lie in [2, 10]");
  }
  const Ket pre = plus_product(n_qubits);
  const Ket post = plus_i_product(n_qubits);
  std::vector<PairAmplitude> report;
  report.reserve(static_cast<std::size_t>(n_qubits) * (n_qubits - 1) / 2);
  for (int i = 1; i <= n_qubits; ++i) {
    for (int j = i + 1; j <= n_qubits; ++j) {
      const QubitPair pair{i, j};
      report.push_back(
          PairAmplitude{pair, pair_amplitude(n_qubits, pair, pre, post,
                                             BoxLabel::same)});
    }
  }
  return report;
}

}  // namespace bellpigeon::pigeonhole
