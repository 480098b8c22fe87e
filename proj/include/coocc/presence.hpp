#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coocc {

enum class Cell : std::uint8_t { Absent = 0, Present = 1, Missing = 2 };

/// Binary presence/absence panel over (entity, unit, period).
///
/// Storage is slice-major: every (entity, period) slice is a contiguous run
/// of n unit cells, so per-slice counts and transforms walk linear memory.
/// Instances are immutable once constructed.
class PresenceTensor {
 public:
  /// Throws InvalidShape (k < 2, n < 2, l < 1, duplicate identifiers, wrong
  /// cell count) or Unimputable (a slice with no observed cell).
  PresenceTensor(std::vector<std::string> entities,
                 std::vector<std::string> units,
                 std::vector<std::string> periods,
                 std::vector<Cell> cells);

  std::size_t num_entities() const noexcept { return entities_.size(); }
  std::size_t num_units() const noexcept { return units_.size(); }
  std::size_t num_periods() const noexcept { return periods_.size(); }

  const std::vector<std::string>& entities() const noexcept { return entities_; }
  const std::vector<std::string>& units() const noexcept { return units_; }
  const std::vector<std::string>& periods() const noexcept { return periods_; }

  std::size_t index(std::size_t entity, std::size_t unit,
                    std::size_t period) const noexcept {
    return (entity * periods_.size() + period) * units_.size() + unit;
  }

  Cell at(std::size_t entity, std::size_t unit, std::size_t period) const noexcept {
    return cells_[index(entity, unit, period)];
  }

  /// Contiguous view of the n unit cells of one (entity, period) slice.
  std::span<const Cell> slice(std::size_t entity, std::size_t period) const noexcept {
    return {cells_.data() + index(entity, 0, period), units_.size()};
  }

  std::span<const Cell> cells() const noexcept { return cells_; }

  std::size_t missing_count() const noexcept;
  bool has_missing() const noexcept { return missing_count() != 0; }

  /// Position of an identifier on its axis; throws UnknownIdentifier.
  std::size_t entity_index(std::string_view id) const;
  std::size_t unit_index(std::string_view id) const;
  std::size_t period_index(std::string_view id) const;

  /// Copy with entities and units exchanged (units become the variables).
  PresenceTensor swap_roles() const;

  /// Same axes, new cell vector; validated like the constructor.
  PresenceTensor with_cells(std::vector<Cell> cells) const;

  friend bool operator==(const PresenceTensor&, const PresenceTensor&) = default;

 private:
  std::vector<std::string> entities_;
  std::vector<std::string> units_;
  std::vector<std::string> periods_;
  std::vector<Cell> cells_;
};

struct CooccurrenceCounts {
  std::size_t total = 0;        // N
  std::size_t count_a = 0;      // m_A
  std::size_t count_b = 0;      // m_B
  std::size_t both = 0;         // X
  friend bool operator==(const CooccurrenceCounts&, const CooccurrenceCounts&) = default;
};

struct SlicePrevalence {
  std::size_t present = 0;   // m
  std::size_t observed = 0;  // n_obs
};

struct PrevalenceSummary {
  std::size_t entities = 0;
  std::size_t units = 0;
  std::size_t periods = 0;
  std::vector<SlicePrevalence> slices;   // [entity * l + period]
  std::vector<std::size_t> richness;     // [period * n + unit]

  const SlicePrevalence& slice(std::size_t entity, std::size_t period) const {
    return slices[entity * periods + period];
  }
  std::size_t unit_richness(std::size_t unit, std::size_t period) const {
    return richness[period * units + unit];
  }
};

/// Parses the long format `entity,unit,period,present`; `present` is 0, 1
/// or empty (missing). Axes are ordered by first appearance.
PresenceTensor parse_presence_csv(std::string_view text);
PresenceTensor read_presence_csv(const std::string& path);

/// Inverse of parse_presence_csv; rows in (period, unit, entity) order.
std::string to_csv(const PresenceTensor& t);

CooccurrenceCounts cooccurrence_counts(const PresenceTensor& t, std::size_t a,
                                       std::size_t b, std::size_t period);

PrevalenceSummary prevalence(const PresenceTensor& t);

}  // namespace coocc
