#include "bellpigeon/samplers.hpp"

#include <cmath>
#include <utility>

namespace bellpigeon::samplers {

using bell::Direction3;
using linalg::CMatrix;
using states::DensityOperator;

namespace {

constexpr double kDistTol = 1e-12;
constexpr double kProbFloor = -1e-12;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_distribution(const LhvDistribution& dist) {
  double sum = 0.0;
  for (double w : dist) {
    if (!(w >= 0.0)) {
      throw DistributionError("assignment weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kDistTol) {
    throw DistributionError("assignment weights must sum to 1");
  }
}

double pair_std_error(double e, std::uint64_t n) {
  const double var = std::max(0.0, 1.0 - e * e);
  return std::sqrt(var / static_cast<double>(n));
}

// Shared draw loop so the index-returning and statistics-returning entry
// points consume the identical stream for a given (dist, n, seed).
template <typename PerDraw>
void for_each_assignment_draw(const LhvDistribution& dist, std::uint64_t n,
                              RngSeed seed, PerDraw&& per_draw) {
  require_distribution(dist);
  if (n == 0) throw RangeError("draw count must be at least 1");
  std::array<double, 8> cumulative{};
  double acc = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    acc += dist[k];
    cumulative[k] = acc;
  }
  cumulative[7] = 1.0;  // absorb rounding in the final bin

  SplitMix64 rng(seed);
  for (std::uint64_t d = 0; d < n; ++d) {
    const double u = rng.uniform01();
    int idx = 0;
    while (idx < 7 && u >= cumulative[static_cast<std::size_t>(idx)]) ++idx;
    per_draw(idx);
  }
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

RngSeed substream(RngSeed base, std::uint64_t index) {
  return RngSeed{mix64(base.seed ^ (0xD1B54A32D192ED03ULL * (index + 1)))};
}

int assignment_value(int index, int var) {
  if (index < 0 || index > 7) throw RangeError("assignment index must be 0..7");
  if (var < 0 || var > 2) throw RangeError("variable index must be 0..2");
  const int bit = (index >> (2 - var)) & 1;
  return bit ? -1 : 1;
}

double assignment_pair_product(int index, int pair, LhvMode mode) {
  if (pair < 0 || pair > 2) throw RangeError("pair index must be 0..2");
  static const int kPairVars[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const double prod =
      static_cast<double>(assignment_value(index, kPairVars[pair][0]) *
                          assignment_value(index, kPairVars[pair][1]));
  // (s i)(t i) = -st: imaginary outcomes flip every pairwise product.
  return (mode == LhvMode::plus_minus_i) ? -prod : prod;
}

double assignment_sum(int index, LhvMode mode) {
  return assignment_pair_product(index, 0, mode) +
         assignment_pair_product(index, 1, mode) +
         assignment_pair_product(index, 2, mode);
}

std::vector<std::uint8_t> sample_assignment_indices(const LhvDistribution& dist,
                                                    std::uint64_t n, RngSeed seed) {
  std::vector<std::uint8_t> indices;
  indices.reserve(n);
  for_each_assignment_draw(dist, n, seed, [&indices](int idx) {
    indices.push_back(static_cast<std::uint8_t>(idx));
  });
  return indices;
}

SampleStats lhv_sample(const LhvDistribution& dist, std::uint64_t n, RngSeed seed,
                       LhvMode mode) {
  double sum_ab = 0.0;
  double sum_ac = 0.0;
  double sum_bc = 0.0;
  for_each_assignment_draw(dist, n, seed, [&](int idx) {
    sum_ab += assignment_pair_product(idx, 0, mode);
    sum_ac += assignment_pair_product(idx, 1, mode);
    sum_bc += assignment_pair_product(idx, 2, mode);
  });
  const double nn = static_cast<double>(n);
  const double e_ab = sum_ab / nn;
  const double e_ac = sum_ac / nn;
  const double e_bc = sum_bc / nn;
  return SampleStats{n,
                     PairStats{n, e_ab, pair_std_error(e_ab, n)},
                     PairStats{n, e_ac, pair_std_error(e_ac, n)},
                     PairStats{n, e_bc, pair_std_error(e_bc, n)}};
}

PairStats quantum_sample(const DensityOperator& rho, const Direction3& da,
                         const Direction3& db, std::uint64_t n, RngSeed seed) {
  if (n == 0) throw RangeError("draw count must be at least 1");
  const CMatrix id2 = CMatrix::identity(2);
  const CMatrix sa = bell::spin_observable(da);
  const CMatrix sb = bell::spin_observable(db);

  // Outcome order (+,+), (+,-), (-,+), (-,-).
  std::array<double, 4> prob{};
  std::array<double, 4> product{1.0, -1.0, -1.0, 1.0};
  int slot = 0;
  for (double s : {1.0, -1.0}) {
    const CMatrix pa = 0.5 * (id2 + s * sa);
    for (double t : {1.0, -1.0}) {
      const CMatrix pb = 0.5 * (id2 + t * sb);
      const double p =
          linalg::trace(linalg::mul(rho.matrix(), linalg::tensor(pa, pb))).real();
      if (p < kProbFloor) {
        throw ModelError("negative outcome probability: state is not a valid model");
      }
      prob[static_cast<std::size_t>(slot++)] = std::max(0.0, p);
    }
  }

  std::array<double, 4> cumulative{};
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    total += prob[k];
    cumulative[k] = total;
  }
  for (std::size_t k = 0; k < 4; ++k) cumulative[k] /= total;
  cumulative[3] = 1.0;

  SplitMix64 rng(seed);
  std::int64_t product_sum = 0;
  for (std::uint64_t d = 0; d < n; ++d) {
    const double u = rng.uniform01();
    std::size_t idx = 0;
    while (idx < 3 && u >= cumulative[idx]) ++idx;
    product_sum += static_cast<std::int64_t>(product[idx]);
  }
  const double e = static_cast<double>(product_sum) / static_cast<double>(n);
  return PairStats{n, e, pair_std_error(e, n)};
}

CampaignResult campaign(const DensityOperator& rho,
                        const bell::MeasurementSetup& setup,
                        std::uint64_t n_per_pair, RngSeed seed) {
  const PairStats ab =
      quantum_sample(rho, setup.a, setup.b, n_per_pair, substream(seed, 0));
  const PairStats ac =
      quantum_sample(rho, setup.a, setup.c, n_per_pair, substream(seed, 1));
  const PairStats bc =
      quantum_sample(rho, setup.b, setup.c, n_per_pair, substream(seed, 2));

  const double sum = ab.e + ac.e + bc.e;
  const double sum_err = std::sqrt(ab.std_error * ab.std_error +
                                   ac.std_error * ac.std_error +
                                   bc.std_error * bc.std_error);

  // The side being tested follows the sign of the empirical sum; the
  // verdict margin is statistical, not the library's 1e-10 analytic one.
  const bool lower_side = sum < 0.0;
  const bell::InequalityId id = lower_side ? bell::InequalityId::pigeon_lower
                                           : bell::InequalityId::pigeon_upper;
  const double bound = bell::classical_bound(id);
  const bool violated = lower_side ? (sum < -1.0 - 4.0 * sum_err)
                                   : (sum > 1.0 + 4.0 * sum_err);
  bell::ViolationReport report{
      id, sum, bound, violated, {setup.a, setup.b, setup.c}};
  return CampaignResult{SampleStats{n_per_pair, ab, ac, bc}, sum, sum_err,
                        std::move(report)};
}

}  // namespace bellpigeon::samplers
