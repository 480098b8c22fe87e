#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "coocc/presence.hpp"
#include "coocc/spectral.hpp"

namespace coocc {

/// Fills every missing cell with a Bernoulli(phat) draw, phat estimated per
/// (entity, period) slice from its observed cells with the boundary
/// adjustment applied on the observed-count scale. Observed cells are never
/// touched. Missing cell i uses draw i of the seed's imputation stream.
/// Throws Unimputable for a slice with no observed cell and TooFewUnits when
/// a slice with missing cells has fewer than 3 observed cells.
PresenceTensor impute(const PresenceTensor& t, std::uint64_t seed);

/// Completes a masked tensor. `masked` is the tensor with cells removed and
/// `seed` the per-repetition seed.
using Imputation = std::function<PresenceTensor(const PresenceTensor& masked,
                                                std::uint64_t seed)>;

struct ImputeCheckConfig {
  double missing_fraction = 0.02;
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  PipelineConfig pipeline;
  /// Defaults to `impute` when empty.
  Imputation imputation;
};

struct ImputeRepetition {
  std::size_t masked = 0;
  double correlation = 1.0;
  Eigen::VectorXd imputed_score;  // sign-aligned with the full-data score
};

struct ImputeCheckReport {
  Eigen::VectorXd full_score;
  std::vector<ImputeRepetition> repetitions;
  double mean_correlation = 1.0;
  double min_correlation = 1.0;
  double max_correlation = 1.0;
};

/// Masks ceil(f * k*n*l) cells uniformly at random (never emptying a slice),
/// imputes, reruns the non-random pipeline and reports the Pearson
/// correlation between the full and imputed score vectors. The imputed
/// vector is sign-aligned with the full one first since an eigenvector's
/// sign carries no information. Requires 0 <= f < 0.2 and a complete tensor.
ImputeCheckReport impute_compare(const PresenceTensor& t, const ImputeCheckConfig& config);

/// The cell mask used by repetition `rep` (true = masked); exposed for tests.
std::vector<bool> draw_mask(const PresenceTensor& t, double fraction, std::uint64_t seed,
                            std::size_t rep);

}  // namespace coocc
