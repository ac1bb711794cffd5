#pragma once

#include <vector>

#include "bellpigeon/states.hpp"

namespace bellpigeon::pigeonhole {

// Upper bound on the particle count accepted by the reporting entry points
// (and re-used by the command-line layer); keeps the dense 2^n vectors
// trivially small.
inline constexpr int kMaxParticles = 10;

enum class BoxLabel { same, diff };

// Rank-2 projector onto the same-box or different-box subspace of a qubit
// pair: same = |00><00| + |11><11|, diff = |01><01| + |10><10|.
struct Projector {
  linalg::CMatrix matrix;
  BoxLabel label;
};

Projector projector(BoxLabel label);

// P|state> / sqrt(<state|P|state>); throws ZeroProbabilityError when the
// selection probability does not exceed eps.
states::Ket collapse(const states::Ket& state, const Projector& p,
                     double eps = 1e-12);

// |<post|state>|^2.
double postselect_probability(const states::Ket& post, const states::Ket& state);

struct QubitPair {
  int i;  // 1-indexed, i < j
  int j;
};

// Applies a 4x4 operator to qubits (i, j) of an n-qubit vector by index
// arithmetic on basis states: qubit k occupies bit (n - k) of the basis
// index, and the operator row index is 2*b_i + b_j.
linalg::CVector apply_pair_operator(const linalg::CMatrix& op, QubitPair pair,
                                    const linalg::CVector& v, int n_qubits);

struct SelectionResult {
  linalg::Complex amplitude;  // <post| P_(i,j) |pre>
  double probability;         // |amplitude|^2
};

SelectionResult pair_amplitude(int n_qubits, QubitPair pair,
                               const states::Ket& pre, const states::Ket& post,
                               BoxLabel label);

struct PairAmplitude {
  QubitPair pair;
  SelectionResult result;
};

// |+>^n preselection, |+i>^n postselection, same-box projector on every
// pair (i, j), i < j, in lexicographic order.
std::vector<PairAmplitude> pigeonhole_report(int n_qubits);

states::Ket plus_product(int n_qubits);
states::Ket plus_i_product(int n_qubits);

}  // namespace bellpigeon::pigeonhole
