#include "coocc/transform.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "coocc/error.hpp"

namespace coocc {

namespace {

double probit(double p) {
  static const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, p);
}

void check_complete(const PresenceTensor& t) {
  if (t.has_missing()) {
    throw Error(ErrorCode::MissingData, std::to_string(t.missing_count()) +
                                            " missing cells; impute before transforming");
  }
}

// Fills the column block of one (entity, period) slice.
void transform_slice(const PresenceTensor& t, LinkKind link, std::size_t e,
                     std::size_t p, TransformedMatrix& out) {
  const std::size_t n = t.num_units();
  const auto cells = t.slice(e, p);
  std::size_t present = 0;
  for (auto c : cells) present += c == Cell::Present;
  const double phat = estimate_p(adjust_count(present, n), n);
  out.phat(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(p)) = phat;
  const double up = transform_entry(true, phat, link);
  const double down = transform_entry(false, phat, link);
  for (std::size_t u = 0; u < n; ++u) {
    out.values(static_cast<Eigen::Index>(p * n + u), static_cast<Eigen::Index>(e)) =
        cells[u] == Cell::Present ? up : down;
  }
}

TransformedMatrix allocate(const PresenceTensor& t, LinkKind link) {
  TransformedMatrix m;
  m.link = link;
  m.units = t.num_units();
  m.periods = t.num_periods();
  m.values.resize(static_cast<Eigen::Index>(t.num_units() * t.num_periods()),
                  static_cast<Eigen::Index>(t.num_entities()));
  m.phat.resize(static_cast<Eigen::Index>(t.num_entities()),
                static_cast<Eigen::Index>(t.num_periods()));
  return m;
}

}  // namespace

std::string_view link_name(LinkKind link) noexcept {
  return link == LinkKind::Logit ? "logit" : "probit";
}

LinkKind parse_link(std::string_view name) {
  if (name == "logit") return LinkKind::Logit;
  if (name == "probit") return LinkKind::Probit;
  throw Error(ErrorCode::BadParams, "unknown link '" + std::string(name) + "'");
}

std::size_t adjust_count(std::size_t present, std::size_t units) {
  if (units < 3) {
    throw Error(ErrorCode::TooFewUnits,
                "boundary adjustment needs at least 3 units, got " + std::to_string(units));
  }
  if (present > units) {
    throw Error(ErrorCode::BadParams, "presence count exceeds unit count");
  }
  return present + 1 < units ? present + 1 : present - 1;
}

double estimate_p(std::size_t adjusted, std::size_t units) {
  return static_cast<double>(adjusted) / static_cast<double>(units);
}

double transform_entry(bool present, double phat, LinkKind link) {
  if (!(phat > 0.0 && phat < 1.0)) {
    throw Error(ErrorCode::BadProbability,
                "estimate " + std::to_string(phat) + " is not inside (0, 1)");
  }
  const bool high = phat >= 0.5;
  if (link == LinkKind::Logit) {
    // log(p/(1-p)) when the cell agrees with the majority side, else its negative.
    const double odds = std::log(phat) - std::log1p(-phat);
    if (present) return high ? odds : -odds;
    return high ? -odds : odds;
  }
  if (present) return high ? probit(phat) : probit(1.0 - phat);
  return high ? probit(1.0 - phat) : probit(phat);
}

TransformedMatrix build_design_matrix(const PresenceTensor& t, LinkKind link) {
  check_complete(t);
  adjust_count(0, t.num_units());  // throws TooFewUnits before the parallel region
  auto out = allocate(t, link);
  const auto slices = static_cast<std::int64_t>(t.num_entities() * t.num_periods());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < slices; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    transform_slice(t, link, idx / t.num_periods(), idx % t.num_periods(), out);
  }
  return out;
}

TransformedMatrix build_design_matrix_serial(const PresenceTensor& t, LinkKind link) {
  check_complete(t);
  auto out = allocate(t, link);
  for (std::size_t e = 0; e < t.num_entities(); ++e) {
    for (std::size_t p = 0; p < t.num_periods(); ++p) transform_slice(t, link, e, p, out);
  }
  return out;
}

}  // namespace coocc
