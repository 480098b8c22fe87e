#include "coocc/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coocc/affinity.hpp"
#include "coocc/error.hpp"
#include "coocc/quadrature.hpp"

namespace coocc {

namespace {

constexpr double kTieTolerance = 1e-12;

double logit(double p) { return std::log(p) - std::log1p(-p); }

void check_order(int order) {
  if (order < 8) throw Error(ErrorCode::BadParams, "quadrature order must be >= 8");
}

ExtHypergeometric checked_model(const PairCounts& c) {
  ExtHypergeometric model(c.total, c.count_a, c.count_b);
  const auto s = model.support();
  if (c.k < s.lo || c.k > s.hi) {
    throw Error(ErrorCode::Infeasible, "k=" + std::to_string(c.k) + " outside support [" +
                                           std::to_string(s.lo) + ", " +
                                           std::to_string(s.hi) + "]");
  }
  return model;
}

void check_upper(double upper, bool allow_one) {
  const bool ok = upper > 0.0 && (allow_one ? upper <= 1.0 : upper < 1.0);
  if (!ok) {
    throw Error(ErrorCode::BadParams, "uniform bound must lie in (0, 1" +
                                          std::string(allow_one ? "]" : ")"));
  }
}

// Integral of P(X = k | p1, p2) over (0, upper)^2, without the 1/upper^2.
double square_integral(const ExtHypergeometric& model, std::int64_t k, double upper,
                       int order) {
  double sum = 0.0;
  for (const auto& q : lower_triangle_rule(upper, order)) {
    const double a = logit(q.x) - logit(q.y);
    sum += q.weight * (model.probability(k, a) + model.probability(k, -a));
  }
  return sum;
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Precomputed node set for the truncated-normal integral on (0, 1)^2.
struct UnitSquareNodes {
  std::vector<QuadPoint> points;
  std::vector<double> g;         // P(X = k | x, y)
  std::vector<double> g_mirror;  // P(X = k | y, x)
};

UnitSquareNodes unit_square_nodes(const ExtHypergeometric& model, std::int64_t k,
                                  int order) {
  UnitSquareNodes n;
  n.points = lower_triangle_rule(1.0, order);
  n.g.reserve(n.points.size());
  n.g_mirror.reserve(n.points.size());
  for (const auto& q : n.points) {
    const double a = logit(q.x) - logit(q.y);
    n.g.push_back(model.probability(k, a));
    n.g_mirror.push_back(model.probability(k, -a));
  }
  return n;
}

// Truncated normal TN(mu, 1; 0, 1) density at every node coordinate.
struct NodeDensity {
  std::vector<double> at_x;
  std::vector<double> at_y;
};

NodeDensity node_density(const UnitSquareNodes& n, double mu) {
  const double z = std_normal_cdf(1.0 - mu) - std_normal_cdf(-mu);
  NodeDensity d;
  d.at_x.reserve(n.points.size());
  d.at_y.reserve(n.points.size());
  for (const auto& q : n.points) {
    d.at_x.push_back(std_normal_pdf(q.x - mu) / z);
    d.at_y.push_back(std_normal_pdf(q.y - mu) / z);
  }
  return d;
}

double truncnormal_sum(const UnitSquareNodes& n, const NodeDensity& d1,
                       const NodeDensity& d2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n.points.size(); ++i) {
    sum += n.points[i].weight * (n.g[i] * d1.at_x[i] * d2.at_y[i] +
                                 n.g_mirror[i] * d1.at_y[i] * d2.at_x[i]);
  }
  return sum;
}

std::vector<double> uniform_grid(double step) {
  if (!(step > 0.0 && step < 0.5)) {
    throw Error(ErrorCode::BadParams, "uniform grid step must lie in (0, 0.5)");
  }
  std::vector<double> g;
  for (int i = 1;; ++i) {
    const double v = i * step;
    if (v >= 1.0 - 1e-12) break;
    g.push_back(v);
  }
  return g;
}

std::vector<double> mu_grid(double step) {
  if (!(step > 0.0 && step <= 6.0)) {
    throw Error(ErrorCode::BadParams, "truncated-normal grid step must lie in (0, 6]");
  }
  const auto count = static_cast<int>(std::floor(6.0 / step + 1e-9)) + 1;
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(-3.0 + i * step);
  return g;
}

void check_cap(const PairCounts& c) {
  if (c.total > kBayesMaxUnits) {
    throw Error(ErrorCode::TooLarge,
                "grid search is capped at N=" + std::to_string(kBayesMaxUnits) +
                    " (got N=" + std::to_string(c.total) +
                    "); use alpha_mle for larger panels");
  }
}

std::size_t first_within_tolerance(const std::vector<double>& v, double& max_out) {
  max_out = *std::max_element(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= max_out - kTieTolerance) return i;
  }
  return 0;
}

template <bool Parallel>
PriorFit maximize_impl(const PairCounts& c, PriorKind kind, double step, int order) {
  check_cap(c);
  check_order(order);
  const auto model = checked_model(c);
  PriorFit fit;
  fit.kind = kind;

  if (kind == PriorKind::Uniform) {
    const auto grid = uniform_grid(step);
    fit.grid_values.assign(grid.size(), 0.0);
    const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (std::int64_t i = 0; i < count; ++i) {
      const double u = grid[static_cast<std::size_t>(i)];
      fit.grid_values[static_cast<std::size_t>(i)] =
          square_integral(model, c.k, u, order) / (u * u);
    }
    const auto best = first_within_tolerance(fit.grid_values, fit.likelihood);
    fit.upper = grid[best];
  } else {
    const auto grid = mu_grid(step);
    const auto nodes = unit_square_nodes(model, c.k, order);
    std::vector<NodeDensity> dens(grid.size());
    const auto m = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t i = 0; i < m; ++i) {
      dens[static_cast<std::size_t>(i)] = node_density(nodes, grid[static_cast<std::size_t>(i)]);
    }
    fit.grid_values.assign(grid.size() * grid.size(), 0.0);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t cell = 0; cell < m * m; ++cell) {
      const auto i = static_cast<std::size_t>(cell / m), j = static_cast<std::size_t>(cell % m);
      fit.grid_values[static_cast<std::size_t>(cell)] = truncnormal_sum(nodes, dens[i], dens[j]);
    }
    const auto best = first_within_tolerance(fit.grid_values, fit.likelihood);
    fit.mu1 = grid[best / grid.size()];
    fit.mu2 = grid[best % grid.size()];
  }
  fit.evaluated = fit.grid_values.size();
  return fit;
}

}  // namespace

double uniform_marginal_likelihood(const PairCounts& c, double upper, int order) {
  check_upper(upper, true);
  check_order(order);
  const auto model = checked_model(c);
  return square_integral(model, c.k, upper, order) / (upper * upper);
}

double uniform_score(const PairCounts& c, double upper, int order) {
  check_upper(upper, false);
  check_order(order);
  const auto model = checked_model(c);
  const auto line = gauss_legendre(order);
  const double edge = logit(upper);
  double boundary = 0.0;
  for (std::size_t j = 0; j < line.nodes.size(); ++j) {
    const double a = edge - logit(upper * line.nodes[j]);
    // g(upper, p2) and g(p1, upper) at the same abscissa.
    boundary += line.weights[j] * (model.probability(c.k, a) + model.probability(c.k, -a));
  }
  boundary *= upper;
  const double area = square_integral(model, c.k, upper, order);
  return boundary / (upper * upper) - 2.0 * area / (upper * upper * upper);
}

double truncnormal_marginal_likelihood(const PairCounts& c, double mu1, double mu2,
                                       int order) {
  check_order(order);
  const auto model = checked_model(c);
  const auto nodes = unit_square_nodes(model, c.k, order);
  return truncnormal_sum(nodes, node_density(nodes, mu1), node_density(nodes, mu2));
}

double marginal_likelihood(const PairCounts& c, const PriorSpec& prior) {
  return prior.kind == PriorKind::Uniform
             ? uniform_marginal_likelihood(c, prior.upper, prior.order)
             : truncnormal_marginal_likelihood(c, prior.mu1, prior.mu2, prior.order);
}

PriorFit maximize_prior(const PairCounts& c, PriorKind kind, double step, int order) {
  return maximize_impl<true>(c, kind, step, order);
}

PriorFit maximize_prior_serial(const PairCounts& c, PriorKind kind, double step,
                               int order) {
  return maximize_impl<false>(c, kind, step, order);
}

}  // namespace coocc
