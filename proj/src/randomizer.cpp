#include "coocc/randomizer.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "coocc/rng.hpp"
#include "coocc/transform.hpp"

namespace coocc {

namespace {

void check_absence(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::BadProbability,
                "absence probability " + std::to_string(p) + " is not inside (0, 1)");
  }
}

ReplicateOutcome run_replicate(const PresenceTensor& t, const RandomizationPlan& plan,
                               const PipelineConfig& config, std::size_t replicate) {
  ReplicateOutcome out;
  try {
    const auto result = run_pipeline(randomize_once(t, plan, replicate), config);
    out.score = result.score;
    out.ridge = result.lda.ridge;
  } catch (const Error& e) {
    out.error = e.code();
  }
  return out;
}

}  // namespace

TransitionKernel make_kernel(double absence, double stay_absent) {
  check_absence(absence);
  const double b = absence / (1.0 - absence) * (1.0 - stay_absent);
  if (!(stay_absent > 0.0 && stay_absent < 1.0) || !(b > 0.0 && b < 1.0)) {
    throw Error(ErrorCode::BadKernel, "kernel (a=" + std::to_string(stay_absent) +
                                          ", b=" + std::to_string(b) +
                                          ") leaves (0, 1) for p=" + std::to_string(absence));
  }
  return {absence, stay_absent, b};
}

TransitionKernel optimal_kernel(double absence) {
  check_absence(absence);
  return {absence, absence, absence};
}

double kl_divergence(double stay_absent, double absence) {
  const auto k = make_kernel(absence, stay_absent);
  const double a = k.stay_absent, p = k.absence, q = 1.0 - p;
  // Logs written as log1p of the offset from a = p so each term is exactly
  // zero at the optimum:
  //   (1-a)/(1-p)          = 1 + (p-a)/(1-p)
  //   a/p                  = 1 + (a-p)/p
  //   (1-2p+ap)/(1-p)^2    = 1 + p(a-p)/(1-p)^2
  const double both_absent_ratio = 1.0 + p * (a - p) / (q * q);
  return 2.0 * (1.0 - a) * p * std::log1p((p - a) / q) +
         a * p * std::log1p((a - p) / p) +
         q * q * both_absent_ratio * std::log1p(p * (a - p) / (q * q));
}

RandomizationPlan make_plan(const PresenceTensor& t, std::size_t replicates,
                            std::uint64_t seed) {
  if (t.has_missing()) {
    throw Error(ErrorCode::MissingData, "randomisation needs a complete tensor");
  }
  RandomizationPlan plan;
  plan.replicates = replicates;
  plan.seed = seed;
  plan.entities = t.num_entities();
  plan.periods = t.num_periods();
  const auto prev = prevalence(t);
  plan.kernels.reserve(plan.entities * plan.periods);
  for (std::size_t e = 0; e < plan.entities; ++e) {
    for (std::size_t p = 0; p < plan.periods; ++p) {
      const double phat = estimate_p(adjust_count(prev.slice(e, p).present, t.num_units()),
                                     t.num_units());
      plan.kernels.push_back(optimal_kernel(1.0 - phat));
    }
  }
  return plan;
}

PresenceTensor randomize_once(const PresenceTensor& t, const RandomizationPlan& plan,
                              std::size_t replicate) {
  if (t.has_missing()) {
    throw Error(ErrorCode::MissingData, "randomisation needs a complete tensor");
  }
  if (plan.entities != t.num_entities() || plan.periods != t.num_periods()) {
    throw Error(ErrorCode::BadParams, "plan does not match tensor shape");
  }
  const auto rng = make_stream(plan.seed, StreamTag::Randomize).substream(replicate);
  std::vector<Cell> cells(t.cells().begin(), t.cells().end());
  for (std::size_t e = 0; e < t.num_entities(); ++e) {
    for (std::size_t p = 0; p < t.num_periods(); ++p) {
      const auto& k = plan.kernel(e, p);
      for (std::size_t u = 0; u < t.num_units(); ++u) {
        const auto idx = t.index(e, u, p);
        const double to_absent = cells[idx] == Cell::Absent ? k.stay_absent : k.to_absent;
        cells[idx] = rng.uniform(idx) < to_absent ? Cell::Absent : Cell::Present;
      }
    }
  }
  return t.with_cells(std::move(cells));
}

EnsembleResult aggregate_replicates(const std::vector<ReplicateOutcome>& outcomes) {
  EnsembleResult out;
  std::optional<Eigen::VectorXd> reference;
  Eigen::VectorXd sum;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    ReplicateDiagnostic d;
    d.replicate = i;
    d.ridge = o.ridge;
    if (!o.score) {
      d.status = o.error ? std::string(error_name(*o.error)) : "no-score";
      ++out.failed;
      out.diagnostics.push_back(d);
      continue;
    }
    Eigen::VectorXd v = *o.score;
    d.norm = v.norm();
    if (!(d.norm > 0.0) || !std::isfinite(d.norm)) {
      d.status = d.norm == 0.0 ? "zero-vector" : "non-finite";
      ++out.failed;
      out.diagnostics.push_back(d);
      continue;
    }
    fix_sign(v);
    if (reference && v.dot(*reference) < 0.0) v = -v;
    d.flipped = v.dot(*o.score) < 0.0;
    v /= d.norm;
    if (!reference) {
      reference = v;
      sum = Eigen::VectorXd::Zero(v.size());
    }
    sum += v;
    ++out.used;
    d.status = "ok";
    out.diagnostics.push_back(d);
  }
  if (out.used == 0 ||
      static_cast<double>(out.failed) > kMaxFailureFraction * static_cast<double>(outcomes.size())) {
    throw Error(ErrorCode::EnsembleUnstable,
                std::to_string(out.failed) + " of " + std::to_string(outcomes.size()) +
                    " replicates failed");
  }
  out.score = sum / static_cast<double>(out.used);
  return out;
}

EnsembleResult ensemble_scores(const PresenceTensor& t, const RandomizationPlan& plan,
                               const PipelineConfig& config) {
  if (plan.replicates == 0) throw Error(ErrorCode::BadParams, "need at least one replicate");
  if (t.has_missing()) throw Error(ErrorCode::MissingData, "randomisation needs a complete tensor");
  std::vector<ReplicateOutcome> outcomes(plan.replicates);
  const auto count = static_cast<std::int64_t>(plan.replicates);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    outcomes[static_cast<std::size_t>(i)] =
        run_replicate(t, plan, config, static_cast<std::size_t>(i));
  }
  return aggregate_replicates(outcomes);
}

EnsembleResult ensemble_scores_serial(const PresenceTensor& t,
                                      const RandomizationPlan& plan,
                                      const PipelineConfig& config) {
  if (plan.replicates == 0) throw Error(ErrorCode::BadParams, "need at least one replicate");
  std::vector<ReplicateOutcome> outcomes;
  outcomes.reserve(plan.replicates);
  for (std::size_t i = 0; i < plan.replicates; ++i) {
    outcomes.push_back(run_replicate(t, plan, config, i));
  }
  return aggregate_replicates(outcomes);
}

void write_diagnostics(std::ostream& out, const EnsembleResult& result) {
  char buf[160];
  for (const auto& d : result.diagnostics) {
    std::snprintf(buf, sizeof buf, "replicate=%zu status=%s norm=%.17g flipped=%d ridge=%.17g\n",
                  d.replicate, d.status.c_str(), d.norm, d.flipped ? 1 : 0, d.ridge);
    out << buf;
  }
}

}  // namespace coocc
