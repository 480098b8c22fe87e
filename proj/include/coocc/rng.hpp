#pragma once

#include <cstdint>

namespace coocc {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless counter-based stream: every draw is a pure function of
/// (seed, stream, counter), so parallel workers reproduce serial output
/// regardless of scheduling.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(key_ ^ mix64(counter));
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Derived stream for a nested index (replicate, repetition, ...).
  constexpr CounterRng substream(std::uint64_t index) const noexcept {
    return CounterRng(key_, index + 1);
  }

 private:
  std::uint64_t key_;
};

/// Stream tags so different consumers of one master seed never overlap.
enum class StreamTag : std::uint64_t {
  Randomize = 1,
  Impute = 2,
  Mask = 3,
};

constexpr CounterRng make_stream(std::uint64_t seed, StreamTag tag) noexcept {
  return CounterRng(seed, static_cast<std::uint64_t>(tag));
}

}  // namespace coocc
