#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coocc/error.hpp"
#include "coocc/presence.hpp"
#include "coocc/spectral.hpp"

namespace coocc {

/// Two-state transition kernel on a cell: P(0 -> 0) = a, P(1 -> 0) = b.
/// `absence` is the stationary probability p of state 0, and
/// a p + b (1 - p) = p holds for every kernel built here.
struct TransitionKernel {
  double absence = 0.5;
  double stay_absent = 0.5;   // a
  double to_absent = 0.5;     // b
};

/// Kernel with the given a and b = (p / (1 - p)) (1 - a).
/// Throws BadProbability for p outside (0, 1), BadKernel when a or b leaves (0, 1).
TransitionKernel make_kernel(double absence, double stay_absent);

/// The minimum-KL stationary kernel, a = b = p. At this optimum the next
/// state does not depend on the current one: each cell is an independent
/// redraw from its fitted marginal.
TransitionKernel optimal_kernel(double absence);

/// KL divergence between the joint law of (X0, X1) and the product of its
/// marginals, as a function of a with b tied to a by stationarity. It is the
/// mutual information of the pair: zero exactly at a = p and positive
/// elsewhere. Throws BadKernel when b leaves (0, 1).
double kl_divergence(double stay_absent, double absence);

struct RandomizationPlan {
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::size_t entities = 0;
  std::size_t periods = 0;
  std::vector<TransitionKernel> kernels;  // [entity * l + period]

  const TransitionKernel& kernel(std::size_t entity, std::size_t period) const {
    return kernels[entity * periods + period];
  }
};

/// Optimal kernels from the boundary-adjusted occupancy estimate of each
/// (entity, period) slice, p = 1 - phat. Throws MissingData.
RandomizationPlan make_plan(const PresenceTensor& t, std::size_t replicates,
                            std::uint64_t seed);

/// One randomised copy. Cell (e, u, r) of replicate i consumes draw
/// `index(e, u, r)` of substream i of the master seed.
PresenceTensor randomize_once(const PresenceTensor& t, const RandomizationPlan& plan,
                              std::size_t replicate);

/// Outcome of one replicate before aggregation.
struct ReplicateOutcome {
  std::optional<Eigen::VectorXd> score;
  std::optional<ErrorCode> error;
  double ridge = 0.0;
};

struct ReplicateDiagnostic {
  std::size_t replicate = 0;
  std::string status;  // "ok", "zero-vector" or an error name
  double norm = 0.0;
  bool flipped = false;
  double ridge = 0.0;
};

struct EnsembleResult {
  Eigen::VectorXd score;  // column mean of the aligned unit-norm rows
  std::size_t used = 0;
  std::size_t failed = 0;
  std::vector<ReplicateDiagnostic> diagnostics;
};

inline constexpr double kMaxFailureFraction = 0.10;

/// Sign-fixes each score vector, aligns it with the first usable one
/// (non-negative inner product), scales it to unit norm and averages in
/// replicate order. Failed and zero vectors are skipped with a diagnostic.
/// Throws EnsembleUnstable when more than 10% of replicates are unusable.
EnsembleResult aggregate_replicates(const std::vector<ReplicateOutcome>& outcomes);

/// Runs the pipeline on plan.replicates randomised copies (OpenMP over
/// replicates) and aggregates them.
EnsembleResult ensemble_scores(const PresenceTensor& t, const RandomizationPlan& plan,
                               const PipelineConfig& config);

/// Single-threaded reference for ensemble_scores.
EnsembleResult ensemble_scores_serial(const PresenceTensor& t,
                                      const RandomizationPlan& plan,
                                      const PipelineConfig& config);

/// One plain-text line per replicate.
void write_diagnostics(std::ostream& out, const EnsembleResult& result);

}  // namespace coocc
