#include "coocc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coocc/error.hpp"

namespace coocc {

double standard_deviation(std::span<const double> v, Deviation kind) {
  const std::size_t n = v.size();
  const std::size_t dof = kind == Deviation::Sample ? n - 1 : n;
  if (n == 0 || dof == 0) {
    throw Error(ErrorCode::NeedMultiplePeriods, "standard deviation needs more values");
  }
  // shifting by the first value makes a constant sample exactly zero
  const double origin = v[0];
  double sum = 0.0;
  for (double x : v) sum += x - origin;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - origin - mean) * (x - origin - mean);
  return std::sqrt(ss / static_cast<double>(dof));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::BadParams, "correlation needs two equal-length samples of size >= 2");
  }
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::Undefined, "correlation of a constant sample");
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t m = i; m <= j; ++m) ranks[order[m]] = avg;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

}  // namespace coocc
