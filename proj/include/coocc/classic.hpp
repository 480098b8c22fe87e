#pragma once

#include <cstdint>
#include <span>

namespace coocc {

// Any nonzero entry counts as presence. Both vectors must have equal length.

/// |A ∩ B| / |A ∪ B|. Throws Undefined when both supports are empty.
double jaccard(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// 2|A ∩ B| / (|A| + |B|). Throws Undefined when both supports are empty.
double sorensen_dice(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Probability that two draws without replacement share a community:
/// sum n_i (n_i - 1) / (N (N - 1)). Throws Undefined when N < 2.
double simpson_diversity(std::span<const std::uint64_t> community_counts);

}  // namespace coocc
