#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "coocc/presence.hpp"

namespace coocc {

enum class LinkKind { Logit, Probit };

std::string_view link_name(LinkKind link) noexcept;
/// Accepts "logit" / "probit"; throws BadParams otherwise.
LinkKind parse_link(std::string_view name);

/// Continuous design matrix built from a complete presence tensor.
struct TransformedMatrix {
  /// n*l rows, period-major (rows [r*n, (r+1)*n) belong to period r), k columns.
  Eigen::MatrixXd values;
  LinkKind link = LinkKind::Logit;
  /// Adjusted occupancy estimate per (entity, period): k x l.
  Eigen::MatrixXd phat;
  std::size_t units = 0;
  std::size_t periods = 0;
};

/// Moves a presence count off the boundary: m + 1 when m < n - 1, else
/// m - 1. Throws TooFewUnits for n < 3 and BadParams for m > n.
std::size_t adjust_count(std::size_t present, std::size_t units);

/// Bernoulli MLE on the adjusted count.
double estimate_p(std::size_t adjusted, std::size_t units);

/// One cell of the logit/probit transform table.
///
/// Presence maps to the non-negative member of the +/- pair and absence to
/// the non-positive one. Throws BadProbability unless 0 < phat < 1.
double transform_entry(bool present, double phat, LinkKind link);

/// Throws MissingData when any cell is missing.
TransformedMatrix build_design_matrix(const PresenceTensor& t, LinkKind link);

/// Single-threaded reference for build_design_matrix.
TransformedMatrix build_design_matrix_serial(const PresenceTensor& t, LinkKind link);

}  // namespace coocc
