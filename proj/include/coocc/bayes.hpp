#pragma once

#include <cstdint>
#include <vector>

namespace coocc {

enum class PriorKind { Uniform, TruncatedNormal };

/// Prior on the two occupancy probabilities (p1, p2) of the affinity model.
///
/// Uniform: both ~ Unif(0, upper). TruncatedNormal: p1 ~ TN(mu1, 1; 0, 1),
/// p2 ~ TN(mu2, 1; 0, 1). `upper` is the uniform bound, not the affinity.
struct PriorSpec {
  PriorKind kind = PriorKind::Uniform;
  double upper = 0.5;
  double mu1 = 0.0;
  double mu2 = 0.0;
  int order = 64;
};

/// Margins and observed co-occurrence of one entity pair.
struct PairCounts {
  std::int64_t k = 0;        // observed co-occurrence
  std::int64_t total = 0;    // N
  std::int64_t count_a = 0;  // m_A
  std::int64_t count_b = 0;  // m_B
};

/// P(X = k) with (p1, p2) integrated against the prior.
double marginal_likelihood(const PairCounts& c, const PriorSpec& prior);

/// f(a) = (1/a^2) * double integral of P(X = k | p1, p2) over (0, a)^2.
double uniform_marginal_likelihood(const PairCounts& c, double upper, int order = 64);

/// f'(a): the two boundary line integrals over a^2 minus (2/a^3) times the
/// double integral. Requires 0 < upper < 1.
double uniform_score(const PairCounts& c, double upper, int order = 64);

double truncnormal_marginal_likelihood(const PairCounts& c, double mu1, double mu2,
                                       int order = 64);

struct PriorFit {
  PriorKind kind = PriorKind::Uniform;
  double upper = 0.0;  // uniform argmax
  double mu1 = 0.0;    // truncated-normal argmax
  double mu2 = 0.0;
  double likelihood = 0.0;
  std::size_t evaluated = 0;
  std::vector<double> grid_values;  // row-major over the scanned grid
};

inline constexpr std::int64_t kBayesMaxUnits = 12;

/// Grid argmax of the marginal likelihood.
///
/// Uniform scans upper in {h, 2h, ..., 1-h}; truncated normal scans
/// (mu1, mu2) over [-3, 3]^2 with step h. Ties go to the smallest parameter
/// (lexicographic). Grid cells are evaluated with OpenMP; the reduction is
/// a serial scan, so the result does not depend on the thread count.
/// Throws TooLarge for N > 12.
PriorFit maximize_prior(const PairCounts& c, PriorKind kind, double step, int order = 64);

/// Single-threaded reference for maximize_prior.
PriorFit maximize_prior_serial(const PairCounts& c, PriorKind kind, double step,
                               int order = 64);

}  // namespace coocc
