#pragma once

#include <cstdint>
#include <vector>

namespace coocc {

/// Parameters of the extended (Fisher noncentral) hypergeometric law of the
/// co-occurrence count X of two entities with marginal counts m_A, m_B over
/// N units. `alpha` is the log odds ratio; it may be +/-infinity.
struct ExtHGParams {
  std::int64_t total = 0;    // N
  std::int64_t count_a = 0;  // m_A
  std::int64_t count_b = 0;  // m_B
  double alpha = 0.0;
};

struct Support {
  std::int64_t lo = 0;  // s = max(m_A + m_B - N, 0)
  std::int64_t hi = 0;  // t = min(m_A, m_B)
  std::size_t size() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
};

/// Throws BadParams unless 0 <= m_A, m_B <= N and N >= 1.
Support support_of(std::int64_t total, std::int64_t count_a, std::int64_t count_b);

/// Extended hypergeometric family for fixed margins. The alpha-free log
/// weights log C(m_A,k) + log C(N-m_A, m_B-k) are computed once, so repeated
/// evaluations at different alpha (root finding, quadrature) stay cheap.
class ExtHypergeometric {
 public:
  ExtHypergeometric(std::int64_t total, std::int64_t count_a, std::int64_t count_b);

  const Support& support() const noexcept { return support_; }

  /// Probabilities for k = s..t; log-space with max shift.
  std::vector<double> pmf(double alpha) const;
  /// pmf(alpha)[k - s] without materialising the vector.
  double probability(std::int64_t k, double alpha) const;
  double mean(double alpha) const;
  /// Mean and variance; the variance is d(mean)/d(alpha).
  std::pair<double, double> moments(double alpha) const;

 private:
  Support support_;
  std::vector<double> log_base_;
};

std::vector<double> ext_hypergeom_pmf(const ExtHGParams& p);
double ext_hypergeom_mean(const ExtHGParams& p);

/// Central hypergeometric pmf (alpha = 0).
std::vector<double> null_pmf(std::int64_t total, std::int64_t count_a,
                             std::int64_t count_b);

/// Maximum likelihood affinity: the root of mean(alpha) = X.
///
/// `observed` may be non-integer (the root is defined for any target in
/// [s, t]). Returns +inf when X = t and -inf when X = s, which is the
/// direction the mean approaches as alpha grows without bound. When s = t
/// the likelihood is flat and the result is NaN. Roots beyond |alpha| = 700
/// are reported as +/-inf. Throws Infeasible when X lies outside [s, t].
double alpha_mle(std::int64_t total, std::int64_t count_a, std::int64_t count_b,
                 double observed);

/// log C(n, k) through log-gamma; -inf outside 0 <= k <= n.
double log_choose(std::int64_t n, std::int64_t k);

}  // namespace coocc
