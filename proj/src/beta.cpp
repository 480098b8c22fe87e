#include "coocc/beta.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "coocc/affinity.hpp"
#include "coocc/error.hpp"

namespace coocc {

namespace {

double one_minus_sd(const Eigen::VectorXd& v, Deviation kind) {
  return 1.0 - standard_deviation(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())), kind);
}

void require_periods(std::size_t periods) {
  if (periods < 2) {
    throw Error(ErrorCode::NeedMultiplePeriods, "the index needs at least two periods");
  }
}

template <bool Parallel>
std::vector<PairAffinity> affinities_impl(const PresenceTensor& t) {
  const std::size_t k = t.num_entities();
  const std::size_t l = t.num_periods();
  const std::size_t pairs = k * (k - 1) / 2;
  std::vector<PairAffinity> out(pairs * l);
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const std::size_t period = idx / pairs;
    std::size_t rem = idx % pairs;
    std::size_t a = 0;
    while (rem >= k - 1 - a) {
      rem -= k - 1 - a;
      ++a;
    }
    const std::size_t b = a + 1 + rem;
    auto& p = out[idx];
    p.a = a;
    p.b = b;
    p.period = period;
    p.counts = cooccurrence_counts(t, a, b, period);
    p.alpha = alpha_mle(static_cast<std::int64_t>(p.counts.total),
                        static_cast<std::int64_t>(p.counts.count_a),
                        static_cast<std::int64_t>(p.counts.count_b),
                        static_cast<double>(p.counts.both));
  }
  return out;
}

}  // namespace

Eigen::MatrixXd score_table(const Eigen::VectorXd& scores, std::size_t units,
                            std::size_t periods) {
  if (static_cast<std::size_t>(scores.size()) != units * periods) {
    throw Error(ErrorCode::BadParams, "score vector length is not n*l");
  }
  Eigen::MatrixXd table(units, periods);
  for (std::size_t r = 0; r < periods; ++r) {
    for (std::size_t u = 0; u < units; ++u) table(u, r) = scores(r * units + u);
  }
  return table;
}

Eigen::VectorXd beta_index(const Eigen::VectorXd& scores, std::size_t units,
                           std::size_t periods, Deviation kind) {
  require_periods(periods);
  const Eigen::MatrixXd table = score_table(scores, units, periods);
  Eigen::VectorXd beta(units);
  for (std::size_t u = 0; u < units; ++u) {
    beta(u) = one_minus_sd(table.row(u).transpose(), kind);
  }
  return beta;
}

double pairwise_similarity(const Eigen::MatrixXd& table, std::size_t u, std::size_t v,
                           Deviation kind) {
  require_periods(static_cast<std::size_t>(table.cols()));
  if (u == v) return 1.0;
  return one_minus_sd((table.row(u) - table.row(v)).transpose(), kind);
}

Eigen::MatrixXd similarity_matrix(const Eigen::MatrixXd& table, Deviation kind) {
  require_periods(static_cast<std::size_t>(table.cols()));
  const auto m = table.rows();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index u = 0; u < m; ++u) {
    for (Eigen::Index v = u + 1; v < m; ++v) {
      s(u, v) = s(v, u) = pairwise_similarity(table, static_cast<std::size_t>(u),
                                              static_cast<std::size_t>(v), kind);
    }
  }
  return s;
}

Eigen::MatrixXd period_similarity_matrix(const Eigen::MatrixXd& table, std::size_t period,
                                         Deviation kind) {
  if (period >= static_cast<std::size_t>(table.cols())) {
    throw Error(ErrorCode::BadParams, "period out of range");
  }
  const auto m = table.rows();
  const auto r = static_cast<Eigen::Index>(period);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index u = 0; u < m; ++u) {
    for (Eigen::Index v = u + 1; v < m; ++v) {
      Eigen::VectorXd pair(2);
      pair << table(u, r), table(v, r);
      s(u, v) = s(v, u) = one_minus_sd(pair, kind);
    }
  }
  return s;
}

PairwiseMatrix pairwise_matrix(const PresenceTensor& t, Axis axis,
                               const PipelineConfig& config,
                               std::optional<std::size_t> period) {
  const PresenceTensor work = axis == Axis::Unit ? t : t.swap_roles();
  const auto result = run_pipeline(work, config);
  const Eigen::MatrixXd table =
      score_table(result.score, work.num_units(), work.num_periods());
  PairwiseMatrix out;
  out.axis = axis;
  out.labels = work.units();
  out.period = period;
  out.values = period ? period_similarity_matrix(table, *period) : similarity_matrix(table);
  return out;
}

std::vector<double> between_period_jaccard(const PresenceTensor& t) {
  require_periods(t.num_periods());
  if (t.has_missing()) throw Error(ErrorCode::MissingData, "Jaccard needs complete data");
  const std::size_t n = t.num_units(), l = t.num_periods(), k = t.num_entities();
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    double sum = 0.0;
    for (std::size_t r = 0; r + 1 < l; ++r) {
      std::size_t both = 0, either = 0;
      for (std::size_t e = 0; e < k; ++e) {
        const bool x = t.at(e, u, r) == Cell::Present;
        const bool y = t.at(e, u, r + 1) == Cell::Present;
        both += x && y;
        either += x || y;
      }
      sum += either == 0 ? std::numeric_limits<double>::quiet_NaN()
                         : static_cast<double>(both) / static_cast<double>(either);
    }
    out[u] = sum / static_cast<double>(l - 1);
  }
  return out;
}

std::vector<double> unit_prevalence(const PresenceTensor& t) {
  const auto prev = prevalence(t);
  const std::size_t n = t.num_units(), l = t.num_periods();
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t r = 0; r < l; ++r) out[u] += static_cast<double>(prev.unit_richness(u, r));
    out[u] /= static_cast<double>(l * t.num_entities());
  }
  return out;
}

std::vector<PairAffinity> pair_affinities(const PresenceTensor& t) {
  return affinities_impl<true>(t);
}

std::vector<PairAffinity> pair_affinities_serial(const PresenceTensor& t) {
  return affinities_impl<false>(t);
}

SimilarityReport compare_indices(const PresenceTensor& t, const CompareConfig& config) {
  if (t.has_missing()) throw Error(ErrorCode::MissingData, "comparison needs complete data");
  require_periods(t.num_periods());
  if (config.links.empty()) throw Error(ErrorCode::BadParams, "no link requested");

  SimilarityReport report;
  report.units = t.units();
  report.seed = config.seed;
  report.pca_threshold = config.pipeline.pca_threshold;

  const std::size_t n = t.num_units(), l = t.num_periods();
  for (const LinkKind link : config.links) {
    PipelineConfig pc = config.pipeline;
    pc.link = link;
    const auto result = run_pipeline(t, pc);
    LinkSummary plain;
    plain.link = link;
    plain.score = result.score;
    plain.beta = beta_index(result.score, n, l, config.deviation);
    plain.ridge = result.lda.ridge;
    plain.basis_condition = result.lda.basis_condition;
    plain.retained = result.retained;
    report.links.push_back(std::move(plain));

    if (config.replicates > 0) {
      const auto plan = make_plan(t, config.replicates, config.seed);
      auto ensemble = ensemble_scores(t, plan, pc);
      LinkSummary rnd;
      rnd.link = link;
      rnd.randomized = true;
      rnd.replicates = config.replicates;
      rnd.score = ensemble.score;
      rnd.beta = beta_index(ensemble.score, n, l, config.deviation);
      rnd.retained = result.retained;
      rnd.ensemble = std::move(ensemble);
      report.links.push_back(std::move(rnd));
    }
  }
  report.jaccard = between_period_jaccard(t);
  report.prevalence = unit_prevalence(t);
  if (config.pair_alpha) report.affinities = pair_affinities(t);
  return report;
}

}  // namespace coocc
