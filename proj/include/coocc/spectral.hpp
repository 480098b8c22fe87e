#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "coocc/presence.hpp"
#include "coocc/transform.hpp"

namespace coocc {

/// Column-centres X with a compensated (Neumaier) mean per column.
Eigen::MatrixXd center_columns(const Eigen::MatrixXd& x);

struct PcaResult {
  Eigen::MatrixXd basis;        // Q: k x r, orthonormal columns
  Eigen::VectorXd eigenvalues;  // descending, all >= threshold
  Eigen::MatrixXd scores;       // Y Q: (n*l) x r
  double threshold = 0.0;
};

/// PCA of the centred matrix Y through the small Gram matrix Y Y^T.
///
/// Eigenvectors v of Y Y^T map to eigenvectors Y^T v of Y^T Y with the same
/// eigenvalue, so only an (n*l) x (n*l) symmetric problem is solved even
/// when Y has thousands of columns. Eigenpairs below `threshold` are
/// dropped; basis columns are sign-fixed (largest-magnitude entry
/// positive). Throws DegenerateData when nothing survives the threshold.
PcaResult gram_pca(const Eigen::MatrixXd& y, double threshold = 1e-5);

/// Ridge escalation for the denominator of a Rayleigh pencil.
///
/// With scale = max(1, trace(den) / dim): the unregularised factor is tried
/// first and kept when its smallest squared Cholesky pivot is at least
/// `pivot_floor` times the largest; otherwise the ridge starts at
/// start * scale and is multiplied by `growth` until a factorisation
/// succeeds or it passes limit * scale.
struct RidgePolicy {
  bool try_unregularized = true;
  double pivot_floor = 1e-12;
  double start = 1e-10;
  double growth = 10.0;
  double limit = 1e-2;
};

struct RayleighResult {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd vectors;       // x, one per column, x^T (den + ridge) x = 1
  Eigen::MatrixXd whitened;      // y = M x, orthonormal columns
  Eigen::MatrixXd factor;        // M, upper triangular, M^T M = den + ridge I
  double ridge = 0.0;
};

/// Maximises x^T num x / x^T den x.
///
/// den + ridge I = M^T M (Cholesky); the symmetric matrix M^-T num M^-1 is
/// eigensolved and x = M^-1 y. All eigenvalues are real and equal those of
/// (den + ridge I)^-1 num. Vectors are sign-fixed on x (largest-magnitude
/// entry positive); equal eigenvalues keep solver order. Throws
/// SingularDenominator when the ridge limit is exhausted and BadParams for
/// non-square, mismatched or asymmetric input.
RayleighResult generalized_rayleigh(const Eigen::MatrixXd& numerator,
                                    const Eigen::MatrixXd& denominator,
                                    const RidgePolicy& policy = {});

struct LdaConfig {
  RidgePolicy ridge;
  /// false: maximise within/between (W over B). true: the swapped ratio.
  bool between_over_within = false;
};

struct LdaResult {
  Eigen::MatrixXd within;   // W = Z^T Z / (n*l - l), Z the stacked centred blocks
  Eigen::MatrixXd between;  // B = sample covariance of the period means
  double ridge = 0.0;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;      // S
  Eigen::MatrixXd basis;        // S1 = M^2 S
  Eigen::MatrixXd new_scores;   // solves new_scores * S1^T = R
  Eigen::VectorXd score;        // first column of new_scores
  double basis_condition = 0.0;
};

inline constexpr double kMaxBasisCondition = 1e12;

/// LDA step on retained PCA scores R ((n*l) x s, period-major blocks).
/// Throws NeedMultiplePeriods for l < 2, IllConditionedBasis when
/// cond(S1) >= 1e12, and propagates SingularDenominator.
LdaResult lda_scores(const Eigen::MatrixXd& retained, std::size_t units,
                     std::size_t periods, const LdaConfig& config = {});

struct PipelineConfig {
  LinkKind link = LinkKind::Logit;
  double pca_threshold = 1e-5;
  /// Leading PCA columns handed to LDA; 0 keeps all of them. Values larger
  /// than the number of retained components are clamped.
  std::size_t retain = 0;
  LdaConfig lda;
};

struct PipelineResult {
  TransformedMatrix design;
  PcaResult pca;
  LdaResult lda;
  std::size_t retained = 0;
  Eigen::VectorXd score;  // N, length n*l
};

/// transform -> centre -> Gram PCA -> LDA on a complete tensor.
PipelineResult run_pipeline(const PresenceTensor& t, const PipelineConfig& config);

/// Flips v so that its largest-magnitude entry is positive (first on ties).
void fix_sign(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace coocc
