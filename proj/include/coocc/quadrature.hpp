#pragma once

#include <vector>

namespace coocc {

/// Gauss-Legendre rule mapped to the open interval (0, 1).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum to 1
};

/// Throws BadParams for order < 1.
GaussLegendre gauss_legendre(int order);

/// Quadrature point of a two-dimensional rule.
struct QuadPoint {
  double x = 0.0;
  double y = 0.0;
  double weight = 0.0;
};

/// Rule for integrals over the lower triangle {0 < y <= x < side}.
///
/// The triangle is split at the midpoint of its hypotenuse into two pieces
/// whose apexes are (0,0) and (side,side), and each piece gets a Duffy
/// collapsed tensor rule. Integrands that depend only on a direction near
/// those corners (an odds ratio of x against y, say) become smooth in the
/// collapsed coordinates. Weights include the Jacobians, so summing
/// weight * f(x, y) integrates f over the triangle. Pair each point with its
/// mirror (y, x) to cover the full square.
std::vector<QuadPoint> lower_triangle_rule(double side, int order);

}  // namespace coocc
