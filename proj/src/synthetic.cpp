#include "coocc/synthetic.hpp"

#include <cmath>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "coocc/error.hpp"
#include "coocc/rng.hpp"

namespace coocc {

namespace {

constexpr std::uint64_t kSyntheticStream = 0x5eed;

std::string label(char prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace

PresenceTensor synthetic_panel(const SyntheticConfig& c) {
  if (c.units < 3 || c.entities < 2 || c.periods < 1 || !(c.low > 0.0) || !(c.high < 1.0) ||
      !(c.low <= c.high) || !(c.persistence_low >= 0.0) || !(c.persistence_high <= 1.0)) {
    throw Error(ErrorCode::BadParams, "invalid synthetic panel configuration");
  }
  const boost::math::normal_distribution<double> std_normal;
  const CounterRng rng(c.seed, kSyntheticStream);
  const std::size_t n = c.units, k = c.entities, l = c.periods;

  std::vector<double> level(n), persistence(n);
  const double span = static_cast<double>(n - 1);
  for (std::size_t u = 0; u < n; ++u) {
    const double q = c.low + (c.high - c.low) * static_cast<double>(u) / span;
    level[u] = std::log(q / (1.0 - q));
    const double rank = static_cast<double>((u * 7) % n) / span;
    persistence[u] = c.persistence_high - (c.persistence_high - c.persistence_low) * rank;
  }

  std::vector<std::string> entities(k), units(n), periods(l);
  for (std::size_t e = 0; e < k; ++e) entities[e] = label('s', e);
  for (std::size_t u = 0; u < n; ++u) units[u] = label('u', u);
  for (std::size_t r = 0; r < l; ++r) periods[r] = label('p', r);

  std::vector<Cell> cells(k * n * l);
  const auto at = [&](std::size_t e, std::size_t u, std::size_t r) {
    return (e * l + r) * n + u;
  };
  for (std::size_t e = 0; e < k; ++e) {
    const double z =
        c.entity_spread *
        boost::math::quantile(std_normal, (static_cast<double>(e) + 0.5) / static_cast<double>(k));
    for (std::size_t u = 0; u < n; ++u) {
      const double prob = 1.0 / (1.0 + std::exp(-(level[u] + z)));
      for (std::size_t r = 0; r < l; ++r) {
        const auto idx = at(e, u, r);
        const double keep = rng.uniform(2 * idx);
        const double draw = rng.uniform(2 * idx + 1);
        if (r > 0 && keep < persistence[u]) {
          cells[idx] = cells[at(e, u, r - 1)];
        } else {
          cells[idx] = draw < prob ? Cell::Present : Cell::Absent;
        }
      }
    }
  }
  return PresenceTensor(std::move(entities), std::move(units), std::move(periods),
                        std::move(cells));
}

}  // namespace coocc
