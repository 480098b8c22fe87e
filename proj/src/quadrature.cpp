#include "coocc/quadrature.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/legendre.hpp>

#include "coocc/error.hpp"

namespace coocc {

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw Error(ErrorCode::BadParams, "quadrature order must be >= 1");
  // Boost returns the non-negative zeros in ascending order.
  const auto zeros = boost::math::legendre_p_zeros<double>(order);
  std::vector<double> x;
  x.reserve(static_cast<std::size_t>(order));
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
    if (*it != 0.0) x.push_back(-*it);
  }
  for (double z : zeros) x.push_back(z);

  GaussLegendre rule;
  rule.nodes.reserve(x.size());
  rule.weights.reserve(x.size());
  for (double xi : x) {
    const double dp = boost::math::legendre_p_prime(order, xi);
    // Standard weight 2 / ((1 - x^2) P'(x)^2) on [-1, 1], halved for (0, 1).
    rule.nodes.push_back(0.5 * (1.0 + xi));
    rule.weights.push_back(1.0 / ((1.0 - xi * xi) * dp * dp));
  }
  return rule;
}

namespace {

struct Vec2 {
  double x, y;
};

void append_duffy(std::vector<QuadPoint>& out, const GaussLegendre& g, Vec2 apex,
                  Vec2 b1, Vec2 b2) {
  const Vec2 e1{b1.x - apex.x, b1.y - apex.y};
  const Vec2 e2{b2.x - b1.x, b2.y - b1.y};
  const double det = std::abs(e1.x * e2.y - e1.y * e2.x);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double u = g.nodes[i];
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double v = g.nodes[j];
      out.push_back({apex.x + u * (e1.x + v * e2.x), apex.y + u * (e1.y + v * e2.y),
                     g.weights[i] * g.weights[j] * u * det});
    }
  }
}

}  // namespace

std::vector<QuadPoint> lower_triangle_rule(double side, int order) {
  if (!(side > 0.0)) throw Error(ErrorCode::BadParams, "triangle side must be positive");
  const auto g = gauss_legendre(order);
  std::vector<QuadPoint> pts;
  pts.reserve(2 * g.nodes.size() * g.nodes.size());
  const Vec2 origin{0.0, 0.0}, corner{side, 0.0}, mid{0.5 * side, 0.5 * side},
      top{side, side};
  append_duffy(pts, g, origin, corner, mid);
  append_duffy(pts, g, top, mid, corner);
  return pts;
}

}  // namespace coocc
