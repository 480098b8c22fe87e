#include "coocc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coocc/error.hpp"

namespace coocc {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

bool is_symmetric(const MatrixXd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

}  // namespace

void fix_sign(Eigen::Ref<VectorXd> v) {
  if (v.size() == 0) return;
  Index arg = 0;
  double best = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      arg = i;
    }
  }
  if (v[arg] < 0.0) v = -v;
}

MatrixXd center_columns(const MatrixXd& x) {
  MatrixXd y = x;
  const auto rows = static_cast<double>(x.rows());
  for (Index j = 0; j < x.cols(); ++j) {
    double sum = 0.0, comp = 0.0;
    for (Index i = 0; i < x.rows(); ++i) {
      const double v = x(i, j);
      const double t = sum + v;
      comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    y.col(j).array() -= (sum + comp) / rows;
  }
  return y;
}

PcaResult gram_pca(const MatrixXd& y, double threshold) {
  if (y.rows() < 2) {
    throw Error(ErrorCode::DegenerateData, "PCA needs at least 2 rows");
  }
  const MatrixXd gram = y * y.transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DegenerateData, "Gram eigensolver did not converge");
  }
  const VectorXd& values = solver.eigenvalues();  // ascending
  std::vector<Index> keep;
  for (Index i = values.size() - 1; i >= 0; --i) {
    if (values[i] >= threshold) keep.push_back(i);
  }
  if (keep.empty()) {
    throw Error(ErrorCode::DegenerateData,
                "no eigenvalue of Y Y^T reaches the threshold " + std::to_string(threshold));
  }
  const auto r = static_cast<Index>(keep.size());
  PcaResult out;
  out.threshold = threshold;
  out.eigenvalues.resize(r);
  out.basis.resize(y.cols(), r);
  for (Index c = 0; c < r; ++c) {
    out.eigenvalues[c] = values[keep[static_cast<std::size_t>(c)]];
    VectorXd p = y.transpose() * solver.eigenvectors().col(keep[static_cast<std::size_t>(c)]);
    p.normalize();
    fix_sign(p);
    out.basis.col(c) = p;
  }
  out.scores = y * out.basis;
  return out;
}

RayleighResult generalized_rayleigh(const MatrixXd& numerator, const MatrixXd& denominator,
                                    const RidgePolicy& policy) {
  const Index dim = numerator.rows();
  if (dim == 0 || numerator.cols() != dim || denominator.rows() != dim ||
      denominator.cols() != dim) {
    throw Error(ErrorCode::BadParams, "pencil matrices must be square and of equal size");
  }
  if (!is_symmetric(numerator) || !is_symmetric(denominator)) {
    throw Error(ErrorCode::BadParams, "pencil matrices must be symmetric");
  }

  const double scale = std::max(1.0, denominator.trace() / static_cast<double>(dim));
  const MatrixXd identity = MatrixXd::Identity(dim, dim);

  Eigen::LLT<MatrixXd> llt;
  double ridge = 0.0;
  bool factored = false;
  if (policy.try_unregularized) {
    llt.compute(denominator);
    if (llt.info() == Eigen::Success) {
      const VectorXd pivots = MatrixXd(llt.matrixL()).diagonal().array().square();
      factored = pivots.minCoeff() > 0.0 &&
                 pivots.minCoeff() >= policy.pivot_floor * pivots.maxCoeff();
    }
  }
  if (!factored) {
    for (ridge = policy.start * scale; ridge <= policy.limit * scale; ridge *= policy.growth) {
      llt.compute(denominator + ridge * identity);
      if (llt.info() == Eigen::Success &&
          MatrixXd(llt.matrixL()).diagonal().minCoeff() > 0.0) {
        factored = true;
        break;
      }
    }
  }
  if (!factored) {
    throw Error(ErrorCode::SingularDenominator,
                "denominator not positive definite after ridge " +
                    std::to_string(policy.limit * scale));
  }

  RayleighResult out;
  out.ridge = ridge;
  out.factor = llt.matrixU();
  // C = M^-T num M^-1 through two triangular solves (L = M^T).
  MatrixXd left = llt.matrixL().solve(numerator);
  MatrixXd whitened = llt.matrixL().solve(left.transpose());
  whitened = 0.5 * (whitened + whitened.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(whitened);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularDenominator, "whitened eigensolver did not converge");
  }
  out.eigenvalues = solver.eigenvalues().reverse();
  out.whitened = solver.eigenvectors().rowwise().reverse();
  out.vectors = llt.matrixU().solve(out.whitened);
  for (Index c = 0; c < dim; ++c) {
    VectorXd x = out.vectors.col(c);
    fix_sign(x);
    if (x.dot(out.vectors.col(c)) < 0.0) out.whitened.col(c) *= -1.0;
    out.vectors.col(c) = x;
  }
  return out;
}

LdaResult lda_scores(const MatrixXd& retained, std::size_t units, std::size_t periods,
                     const LdaConfig& config) {
  if (periods < 2) {
    throw Error(ErrorCode::NeedMultiplePeriods, "LDA needs at least 2 periods");
  }
  const auto n = static_cast<Index>(units), l = static_cast<Index>(periods);
  if (retained.rows() != n * l || retained.cols() < 1) {
    throw Error(ErrorCode::BadParams, "retained scores must have n*l rows and >= 1 column");
  }
  const Index s = retained.cols();

  MatrixXd means(l, s);
  MatrixXd stacked(n * l, s);
  for (Index r = 0; r < l; ++r) {
    const auto block = retained.middleRows(r * n, n);
    means.row(r) = block.colwise().mean();
    stacked.middleRows(r * n, n) = block.rowwise() - means.row(r);
  }
  const MatrixXd centred_means = means.rowwise() - means.colwise().mean();

  LdaResult out;
  out.within = stacked.transpose() * stacked / static_cast<double>(n * l - l);
  out.between = centred_means.transpose() * centred_means / static_cast<double>(l - 1);

  const auto& num = config.between_over_within ? out.between : out.within;
  const auto& den = config.between_over_within ? out.within : out.between;
  const auto pencil = generalized_rayleigh(num, den, config.ridge);
  out.ridge = pencil.ridge;
  out.eigenvalues = pencil.eigenvalues;
  out.vectors = pencil.vectors;
  out.basis = pencil.factor * (pencil.factor * pencil.vectors);

  Eigen::JacobiSVD<MatrixXd> svd(out.basis);
  const auto& sv = svd.singularValues();
  out.basis_condition = sv[sv.size() - 1] > 0.0
                            ? sv[0] / sv[sv.size() - 1]
                            : std::numeric_limits<double>::infinity();
  if (!(out.basis_condition < kMaxBasisCondition)) {
    throw Error(ErrorCode::IllConditionedBasis,
                "S1 condition number " + std::to_string(out.basis_condition));
  }
  // new_scores * S1^T = R  <=>  S1 * new_scores^T = R^T
  out.new_scores = out.basis.colPivHouseholderQr().solve(retained.transpose()).transpose();
  out.score = out.new_scores.col(0);
  return out;
}

PipelineResult run_pipeline(const PresenceTensor& t, const PipelineConfig& config) {
  if (t.num_periods() < 2) {
    throw Error(ErrorCode::NeedMultiplePeriods, "the index needs at least 2 periods");
  }
  PipelineResult out;
  out.design = build_design_matrix(t, config.link);
  out.pca = gram_pca(center_columns(out.design.values), config.pca_threshold);
  const auto r = static_cast<std::size_t>(out.pca.scores.cols());
  out.retained = config.retain == 0 ? r : std::min(config.retain, r);
  out.lda = lda_scores(out.pca.scores.leftCols(static_cast<Index>(out.retained)),
                       t.num_units(), t.num_periods(), config.lda);
  out.score = out.lda.score;
  return out;
}

}  // namespace coocc
