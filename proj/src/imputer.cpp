#include "coocc/imputer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "coocc/error.hpp"
#include "coocc/rng.hpp"
#include "coocc/stats.hpp"
#include "coocc/transform.hpp"

namespace coocc {

PresenceTensor impute(const PresenceTensor& t, std::uint64_t seed) {
  if (!t.has_missing()) return t;
  const auto prev = prevalence(t);
  const auto rng = make_stream(seed, StreamTag::Impute);
  std::vector<Cell> cells(t.cells().begin(), t.cells().end());
  for (std::size_t e = 0; e < t.num_entities(); ++e) {
    for (std::size_t p = 0; p < t.num_periods(); ++p) {
      const auto& sp = prev.slice(e, p);
      if (sp.observed == t.num_units()) continue;
      if (sp.observed == 0) {
        throw Error(ErrorCode::Unimputable, "entity '" + t.entities()[e] +
                                                "' has no observed cell in period '" +
                                                t.periods()[p] + "'");
      }
      const double phat = estimate_p(adjust_count(sp.present, sp.observed), sp.observed);
      for (std::size_t u = 0; u < t.num_units(); ++u) {
        const auto idx = t.index(e, u, p);
        if (cells[idx] != Cell::Missing) continue;
        cells[idx] = rng.uniform(idx) < phat ? Cell::Present : Cell::Absent;
      }
    }
  }
  return t.with_cells(std::move(cells));
}

std::vector<bool> draw_mask(const PresenceTensor& t, double fraction, std::uint64_t seed,
                            std::size_t rep) {
  const std::size_t total = t.cells().size();
  const auto target =
      static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(total) - 1e-9));
  std::vector<bool> mask(total, false);
  if (target == 0) return mask;

  const auto rng = make_stream(seed, StreamTag::Mask).substream(rep);
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  // Fisher-Yates driven by the counter stream.
  for (std::size_t i = 0; i + 1 < total; ++i) {
    const auto span = total - i;
    const auto j = i + std::min(span - 1, static_cast<std::size_t>(rng.uniform(i) *
                                                                   static_cast<double>(span)));
    std::swap(order[i], order[j]);
  }

  const std::size_t n = t.num_units();
  std::vector<std::size_t> observed_left(t.num_entities() * t.num_periods(), n);
  std::size_t masked = 0;
  for (std::size_t idx : order) {
    if (masked == target) break;
    auto& left = observed_left[idx / n];  // slice-major storage: idx / n = e * l + p
    // keep at least 3 observed cells so the slice stays imputable
    if (left <= 3) continue;
    --left;
    mask[idx] = true;
    ++masked;
  }
  return mask;
}

ImputeCheckReport impute_compare(const PresenceTensor& t, const ImputeCheckConfig& config) {
  if (!(config.missing_fraction >= 0.0 && config.missing_fraction < 0.2)) {
    throw Error(ErrorCode::BadParams, "missing fraction must lie in [0, 0.2)");
  }
  if (config.repetitions == 0) throw Error(ErrorCode::BadParams, "need at least one repetition");
  if (t.has_missing()) throw Error(ErrorCode::MissingData, "impute_compare needs complete data");

  const Imputation imputation =
      config.imputation ? config.imputation
                        : Imputation([](const PresenceTensor& m, std::uint64_t s) {
                            return impute(m, s);
                          });

  ImputeCheckReport report;
  report.full_score = run_pipeline(t, config.pipeline).score;
  report.repetitions.resize(config.repetitions);

  std::vector<std::optional<Error>> errors(config.repetitions);
  const auto reps = static_cast<std::int64_t>(config.repetitions);
  const auto seeds = make_stream(config.seed, StreamTag::Impute);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < reps; ++r) {
    const auto rep = static_cast<std::size_t>(r);
    try {
      const auto mask = draw_mask(t, config.missing_fraction, config.seed, rep);
      std::vector<Cell> cells(t.cells().begin(), t.cells().end());
      std::size_t masked = 0;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (mask[i]) {
          cells[i] = Cell::Missing;
          ++masked;
        }
      }
      const auto completed = imputation(t.with_cells(std::move(cells)), seeds.bits(rep));
      Eigen::VectorXd score = run_pipeline(completed, config.pipeline).score;
      if (score.dot(report.full_score) < 0.0) score = -score;
      auto& out = report.repetitions[rep];
      out.masked = masked;
      out.correlation = pearson(std::span<const double>(report.full_score.data(),
                                                        static_cast<std::size_t>(report.full_score.size())),
                                std::span<const double>(score.data(), static_cast<std::size_t>(score.size())));
      out.imputed_score = std::move(score);
    } catch (const Error& e) {
      errors[rep] = e;
    }
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }

  double sum = 0.0;
  report.min_correlation = std::numeric_limits<double>::infinity();
  report.max_correlation = -std::numeric_limits<double>::infinity();
  for (const auto& r : report.repetitions) {
    sum += r.correlation;
    report.min_correlation = std::min(report.min_correlation, r.correlation);
    report.max_correlation = std::max(report.max_correlation, r.correlation);
  }
  report.mean_correlation = sum / static_cast<double>(report.repetitions.size());
  return report;
}

}  // namespace coocc
