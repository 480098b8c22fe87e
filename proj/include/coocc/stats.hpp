#pragma once

#include <span>
#include <vector>

namespace coocc {

/// Sample (divisor n - 1) or population (divisor n) standard deviation.
enum class Deviation { Sample, Population };

double standard_deviation(std::span<const double> v, Deviation kind = Deviation::Sample);

double pearson(std::span<const double> x, std::span<const double> y);

/// Ranks starting at 1; ties share their average rank.
std::vector<double> average_ranks(std::span<const double> v);

/// Pearson correlation of the average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace coocc
