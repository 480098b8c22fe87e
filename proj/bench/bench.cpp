#include <benchmark/benchmark.h>

#include "coocc/bayes.hpp"
#include "coocc/beta.hpp"
#include "coocc/randomizer.hpp"
#include "coocc/synthetic.hpp"
#include "coocc/transform.hpp"

namespace {

coocc::PresenceTensor panel(std::size_t entities) {
  coocc::SyntheticConfig c;
  c.entities = entities;
  return coocc::synthetic_panel(c);
}

void BM_DesignMatrix(benchmark::State& state) {
  const auto t = panel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = state.range(1) ? coocc::build_design_matrix(t, coocc::LinkKind::Probit)
                            : coocc::build_design_matrix_serial(t, coocc::LinkKind::Probit);
    benchmark::DoNotOptimize(m.values.data());
  }
}
BENCHMARK(BM_DesignMatrix)->ArgNames({"entities", "omp"})->ArgsProduct({{200, 2000}, {0, 1}});

void BM_Ensemble(benchmark::State& state) {
  const auto t = panel(200);
  const auto plan = coocc::make_plan(t, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto r = state.range(1) ? coocc::ensemble_scores(t, plan, {}) : coocc::ensemble_scores_serial(t, plan, {});
    benchmark::DoNotOptimize(r.score.data());
  }
}
BENCHMARK(BM_Ensemble)->ArgNames({"replicates", "omp"})->ArgsProduct({{50}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BayesGrid(benchmark::State& state) {
  const coocc::PairCounts c{3, 10, 5, 6};
  for (auto _ : state) {
    auto fit = state.range(0) ? coocc::maximize_prior(c, coocc::PriorKind::TruncatedNormal, 0.25)
                              : coocc::maximize_prior_serial(c, coocc::PriorKind::TruncatedNormal, 0.25);
    benchmark::DoNotOptimize(fit.likelihood);
  }
}
BENCHMARK(BM_BayesGrid)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PairAffinities(benchmark::State& state) {
  const auto t = panel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto a = state.range(1) ? coocc::pair_affinities(t) : coocc::pair_affinities_serial(t);
    benchmark::DoNotOptimize(a.data());
  }
}
BENCHMARK(BM_PairAffinities)->ArgNames({"entities", "omp"})->ArgsProduct({{100}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
