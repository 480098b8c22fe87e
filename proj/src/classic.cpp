#include "coocc/classic.hpp"

#include <string>

#include "coocc/error.hpp"

namespace coocc {

namespace {

struct Overlap {
  std::uint64_t size_a = 0, size_b = 0, both = 0;
};

Overlap overlap(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::BadParams, "vectors differ in length (" +
                                          std::to_string(a.size()) + " vs " +
                                          std::to_string(b.size()) + ")");
  }
  Overlap o;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool x = a[i] != 0, y = b[i] != 0;
    o.size_a += x;
    o.size_b += y;
    o.both += x && y;
  }
  return o;
}

}  // namespace

double jaccard(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const auto o = overlap(a, b);
  const auto uni = o.size_a + o.size_b - o.both;
  if (uni == 0) throw Error(ErrorCode::Undefined, "jaccard: union is empty");
  return static_cast<double>(o.both) / static_cast<double>(uni);
}

double sorensen_dice(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const auto o = overlap(a, b);
  const auto total = o.size_a + o.size_b;
  if (total == 0) throw Error(ErrorCode::Undefined, "sorensen_dice: both sets empty");
  return 2.0 * static_cast<double>(o.both) / static_cast<double>(total);
}

double simpson_diversity(std::span<const std::uint64_t> community_counts) {
  std::uint64_t total = 0;
  double same = 0.0;
  for (auto c : community_counts) {
    total += c;
    same += static_cast<double>(c) * static_cast<double>(c == 0 ? 0 : c - 1);
  }
  if (total < 2) throw Error(ErrorCode::Undefined, "simpson_diversity: N < 2");
  const auto n = static_cast<double>(total);
  return same / (n * (n - 1.0));
}

}  // namespace coocc
