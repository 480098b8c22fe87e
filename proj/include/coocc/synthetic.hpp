#pragma once

#include <cstddef>
#include <cstdint>

#include "coocc/presence.hpp"

namespace coocc {

/// Seed of the reference synthetic panel used by the acceptance suite.
inline constexpr std::uint64_t kReferencePanelSeed = 20180615;

/// Synthetic panel with a prevalence gradient across units.
///
/// Unit u has occupancy level q_u running linearly from `low` to `high`.
/// Entity e has a fixed offset z_e, the ((e + 0.5) / k) standard normal
/// quantile scaled by `entity_spread`. Period 0 presence is
/// Bernoulli(sigmoid(logit(q_u) + z_e)). Each later period keeps the
/// previous cell with probability pi_u and otherwise redraws it from the
/// same Bernoulli. The persistence pi_u runs from `persistence_high` to
/// `persistence_low` over the stride-7 permutation of unit indices, so it
/// is not a monotone function of q_u. Draw i of cell i comes from a counter
/// stream keyed by the seed.
struct SyntheticConfig {
  std::size_t units = 16;
  std::size_t entities = 200;
  std::size_t periods = 2;
  double low = 0.15;
  double high = 0.85;
  double entity_spread = 1.0;
  double persistence_high = 0.9;
  double persistence_low = 0.3;
  std::uint64_t seed = kReferencePanelSeed;
};

PresenceTensor synthetic_panel(const SyntheticConfig& config = {});

}  // namespace coocc
