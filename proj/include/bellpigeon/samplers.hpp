#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bellpigeon/bell.hpp"

namespace bellpigeon::samplers {

struct RngSeed {
  std::uint64_t seed;
};

// SplitMix64: a fixed-increment 64-bit generator whose output depends only
// on integer arithmetic, so identical seeds give bit-identical streams on
// every platform. Uniform doubles take the top 53 bits of each output.
class SplitMix64 {
 public:
  explicit SplitMix64(RngSeed seed) : state_(seed.seed) {}
  std::uint64_t next();
  double uniform01();  // [0, 1)

 private:
  std::uint64_t state_;
};

// Decorrelated seed for substream `index` of `base`; campaigns give each
// setting pair its own substream (substream index = pair ordinal).
RngSeed substream(RngSeed base, std::uint64_t index);

// Hidden-variable outcome alphabet: values +/-1, or +/-i realized
// operationally as the outcomes of a Y measurement (eigenstates
// (|0> +/- i|1>)/sqrt2) and arithmetically as literal imaginary units, so
// every pairwise product is still real.
enum class LhvMode { plus_minus_one, plus_minus_i };

// A joint assignment to (lambda_a, lambda_b, lambda_c) is an index 0..7:
// bit 2 holds a, bit 1 holds b, bit 0 holds c; a zero bit means the +
// value. Every per-draw product and sum below is a pure function of the
// index, which is what pins the classical per-draw sums to {-1, 3}
// (plus_minus_one) and {-3, 1} (plus_minus_i).
int assignment_value(int index, int var);  // var 0=a, 1=b, 2=c; returns +/-1 sign
double assignment_pair_product(int index, int pair, LhvMode mode);  // pair 0=ab,1=ac,2=bc
double assignment_sum(int index, LhvMode mode);

using LhvDistribution = std::array<double, 8>;

struct PairStats {
  std::uint64_t n;
  double e;          // empirical correlation in [-1, 1]
  double std_error;  // sqrt((1 - e^2) / n)
};

struct SampleStats {
  std::uint64_t n;  // draws per pair
  PairStats ab;
  PairStats ac;
  PairStats bc;
};

// n assignment indices drawn from `dist` (which must be nonnegative and
// sum to 1 within 1e-12, else DistributionError).
std::vector<std::uint8_t> sample_assignment_indices(const LhvDistribution& dist,
                                                    std::uint64_t n, RngSeed seed);

// Counterfactual sampling: a single draw fixes all three outcomes, so all
// three pair products come from the same assignment.
SampleStats lhv_sample(const LhvDistribution& dist, std::uint64_t n, RngSeed seed,
                       LhvMode mode = LhvMode::plus_minus_one);

// Samples joint outcomes (s, t) with Born probabilities
// tr(rho (1/2)(I + s a.sigma) (x) (1/2)(I + t b.sigma)). A probability
// below -1e-12 signals an invalid state -> ModelError; tiny negatives are
// clamped to zero.
PairStats quantum_sample(const states::DensityOperator& rho,
                         const bell::Direction3& da, const bell::Direction3& db,
                         std::uint64_t n, RngSeed seed);

struct CampaignResult {
  SampleStats stats;
  double sum;            // e_ab + e_ac + e_bc
  double sum_std_error;  // quadrature combination of the pair errors
  bell::ViolationReport report;
};

// Quantum sampling of all three setting pairs with fresh draws per pair
// (unlike the counterfactual LHV sampler). The verdict tests the empirical
// sum against the classical window [-1, 1] with a 4 * stderr margin.
CampaignResult campaign(const states::DensityOperator& rho,
                        const bell::MeasurementSetup& setup,
                        std::uint64_t n_per_pair, RngSeed seed);

}  // namespace bellpigeon::samplers
