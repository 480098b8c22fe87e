#include "coocc/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "coocc/error.hpp"

namespace coocc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAlphaCap = 700.0;

}  // namespace

double log_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -kInf;
  if (k == 0 || k == n) return 0.0;
  using boost::math::lgamma;
  return lgamma(static_cast<double>(n + 1)) - lgamma(static_cast<double>(k + 1)) -
         lgamma(static_cast<double>(n - k + 1));
}

Support support_of(std::int64_t total, std::int64_t count_a, std::int64_t count_b) {
  if (total < 1 || count_a < 0 || count_b < 0 || count_a > total || count_b > total) {
    throw Error(ErrorCode::BadParams, "invalid margins N=" + std::to_string(total) +
                                          " m_A=" + std::to_string(count_a) +
                                          " m_B=" + std::to_string(count_b));
  }
  return {std::max<std::int64_t>(count_a + count_b - total, 0),
          std::min(count_a, count_b)};
}

ExtHypergeometric::ExtHypergeometric(std::int64_t total, std::int64_t count_a,
                                     std::int64_t count_b)
    : support_(support_of(total, count_a, count_b)) {
  log_base_.reserve(support_.size());
  for (auto k = support_.lo; k <= support_.hi; ++k) {
    log_base_.push_back(log_choose(count_a, k) + log_choose(total - count_a, count_b - k));
  }
}

std::vector<double> ExtHypergeometric::pmf(double alpha) const {
  const std::size_t m = log_base_.size();
  std::vector<double> out(m, 0.0);
  if (std::isnan(alpha)) {
    throw Error(ErrorCode::BadParams, "alpha is NaN");
  }
  if (std::isinf(alpha)) {
    out[alpha > 0 ? m - 1 : 0] = 1.0;
    return out;
  }
  double top = -kInf;
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = log_base_[i] + alpha * static_cast<double>(support_.lo + static_cast<std::int64_t>(i));
    top = std::max(top, out[i]);
  }
  double sum = 0.0;
  for (auto& w : out) {
    w = std::exp(w - top);
    sum += w;
  }
  for (auto& w : out) w /= sum;
  return out;
}

double ExtHypergeometric::probability(std::int64_t k, double alpha) const {
  if (k < support_.lo || k > support_.hi) return 0.0;
  if (std::isinf(alpha)) return (alpha > 0 ? k == support_.hi : k == support_.lo) ? 1.0 : 0.0;
  double top = -kInf;
  for (std::size_t i = 0; i < log_base_.size(); ++i) {
    top = std::max(top, log_base_[i] + alpha * static_cast<double>(support_.lo + static_cast<std::int64_t>(i)));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < log_base_.size(); ++i) {
    sum += std::exp(log_base_[i] +
                    alpha * static_cast<double>(support_.lo + static_cast<std::int64_t>(i)) - top);
  }
  const auto j = static_cast<std::size_t>(k - support_.lo);
  return std::exp(log_base_[j] + alpha * static_cast<double>(k) - top) / sum;
}

std::pair<double, double> ExtHypergeometric::moments(double alpha) const {
  const auto w = pmf(alpha);
  // Moments of (k - s) keep the terms small when s is large.
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d = static_cast<double>(i);
    m1 += d * w[i];
    m2 += d * d * w[i];
  }
  return {static_cast<double>(support_.lo) + m1, std::max(0.0, m2 - m1 * m1)};
}

double ExtHypergeometric::mean(double alpha) const { return moments(alpha).first; }

std::vector<double> ext_hypergeom_pmf(const ExtHGParams& p) {
  return ExtHypergeometric(p.total, p.count_a, p.count_b).pmf(p.alpha);
}

double ext_hypergeom_mean(const ExtHGParams& p) {
  return ExtHypergeometric(p.total, p.count_a, p.count_b).mean(p.alpha);
}

std::vector<double> null_pmf(std::int64_t total, std::int64_t count_a,
                             std::int64_t count_b) {
  return ext_hypergeom_pmf({total, count_a, count_b, 0.0});
}

double alpha_mle(std::int64_t total, std::int64_t count_a, std::int64_t count_b,
                 double observed) {
  const ExtHypergeometric dist(total, count_a, count_b);
  const auto [s, t] = dist.support();
  const double lo_x = static_cast<double>(s), hi_x = static_cast<double>(t);
  if (!(observed >= lo_x && observed <= hi_x)) {
    throw Error(ErrorCode::Infeasible, "observed co-occurrence " + std::to_string(observed) +
                                           " outside support [" + std::to_string(s) + ", " +
                                           std::to_string(t) + "]");
  }
  if (s == t) return std::numeric_limits<double>::quiet_NaN();
  if (observed == hi_x) return kInf;
  if (observed == lo_x) return -kInf;

  auto excess = [&](double a) { return dist.mean(a) - observed; };

  double lo = -40.0, hi = 40.0;
  while (excess(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > kAlphaCap) return kInf;
  }
  while (excess(lo) > 0.0) {
    hi = lo;
    lo *= 2.0;
    if (lo < -kAlphaCap) return -kInf;
  }

  // Bisection to a coarse bracket, then safeguarded Newton.
  while (hi - lo > 1e-2) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  const double tol = 1e-12 * std::max(1.0, hi_x);
  double a = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const auto [mean, var] = dist.moments(a);
    const double f = mean - observed;
    if (std::abs(f) <= tol) break;
    (f < 0.0 ? lo : hi) = a;
    double next = var > 0.0 ? a - f / var : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == a || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(a)) break;
    a = next;
  }
  return a;
}

}  // namespace coocc
