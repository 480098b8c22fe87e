#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coocc/presence.hpp"
#include "coocc/randomizer.hpp"
#include "coocc/spectral.hpp"
#include "coocc/stats.hpp"

namespace coocc {

/// Reshapes a period-major score vector of length n*l into an n x l table.
Eigen::MatrixXd score_table(const Eigen::VectorXd& scores, std::size_t units,
                            std::size_t periods);

/// 1 - sd of {N_i, N_{i+n}, ..., N_{i+n(l-1)}} for every unit i.
/// Throws NeedMultiplePeriods for l < 2.
Eigen::VectorXd beta_index(const Eigen::VectorXd& scores, std::size_t units,
                           std::size_t periods, Deviation kind = Deviation::Sample);

/// 1 - sd over periods of the differences table(u, r) - table(v, r).
double pairwise_similarity(const Eigen::MatrixXd& table, std::size_t u, std::size_t v,
                           Deviation kind = Deviation::Sample);

/// All pairwise similarities; symmetric with a diagonal of exactly 1.
Eigen::MatrixXd similarity_matrix(const Eigen::MatrixXd& table,
                                  Deviation kind = Deviation::Sample);

/// Single-period variant: 1 - sd of the pair {table(u, r), table(v, r)}.
Eigen::MatrixXd period_similarity_matrix(const Eigen::MatrixXd& table, std::size_t period,
                                         Deviation kind = Deviation::Sample);

enum class Axis { Unit, Entity };

struct PairwiseMatrix {
  Axis axis = Axis::Unit;
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  std::optional<std::size_t> period;
};

/// Runs the pipeline on t (Axis::Unit) or on the role-swapped tensor
/// (Axis::Entity) and builds the pairwise matrix of the resulting items.
PairwiseMatrix pairwise_matrix(const PresenceTensor& t, Axis axis,
                               const PipelineConfig& config,
                               std::optional<std::size_t> period = std::nullopt);

/// Per unit: Jaccard between the entity sets present in consecutive
/// periods, averaged over the l - 1 transitions. NaN when a transition has
/// an empty union. Requires l >= 2 and complete data.
std::vector<double> between_period_jaccard(const PresenceTensor& t);

/// Fraction of entities present in a unit, averaged over periods.
std::vector<double> unit_prevalence(const PresenceTensor& t);

struct LinkSummary {
  LinkKind link = LinkKind::Logit;
  bool randomized = false;
  std::size_t replicates = 0;
  Eigen::VectorXd score;
  Eigen::VectorXd beta;
  double ridge = 0.0;            // non-randomised run only
  double basis_condition = 0.0;  // non-randomised run only
  std::size_t retained = 0;
  std::optional<EnsembleResult> ensemble;
};

struct PairAffinity {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t period = 0;
  CooccurrenceCounts counts;
  double alpha = 0.0;
};

struct CompareConfig {
  std::vector<LinkKind> links{LinkKind::Logit};
  PipelineConfig pipeline;
  std::size_t replicates = 0;  // 0: non-randomised only
  std::uint64_t seed = 0;
  Deviation deviation = Deviation::Sample;
  bool pair_alpha = false;
};

struct SimilarityReport {
  std::vector<std::string> units;
  std::uint64_t seed = 0;
  double pca_threshold = 0.0;
  /// One entry per link; when replicates > 0 the randomised entry follows
  /// the non-randomised one.
  std::vector<LinkSummary> links;
  std::vector<double> jaccard;
  std::vector<double> prevalence;
  std::vector<PairAffinity> affinities;
};

/// Non-randomised (and optionally randomised) indices per requested link,
/// plus between-period Jaccard, unit prevalence and optional per-pair
/// affinities. Throws MissingData on incomplete data.
SimilarityReport compare_indices(const PresenceTensor& t, const CompareConfig& config);

/// Every entity pair in every period, computed in parallel.
std::vector<PairAffinity> pair_affinities(const PresenceTensor& t);
std::vector<PairAffinity> pair_affinities_serial(const PresenceTensor& t);

}  // namespace coocc
