#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coocc/presence.hpp"

namespace coocc::testing {

// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }

  Eigen::MatrixXd matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
    return m;
  }

  // Symmetric positive definite with eigenvalues in roughly [0.1, dim + 1].
  Eigen::MatrixXd spd(Eigen::Index dim) {
    const Eigen::MatrixXd a = matrix(dim, dim);
    return a * a.transpose() + 0.1 * Eigen::MatrixXd::Identity(dim, dim);
  }

  std::vector<std::uint8_t> bits(std::size_t n, double p = 0.5) {
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = coin(p) ? 1 : 0;
    return v;
  }

  // Complete tensor; each (entity, period) slice has its own occupancy.
  PresenceTensor tensor(std::size_t k, std::size_t n, std::size_t l) {
    std::vector<std::string> e(k), u(n), p(l);
    for (std::size_t i = 0; i < k; ++i) e[i] = "e" + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i) u[i] = "u" + std::to_string(i);
    for (std::size_t i = 0; i < l; ++i) p[i] = "p" + std::to_string(i);
    std::vector<Cell> cells(k * n * l);
    for (std::size_t s = 0; s < k * l; ++s) {
      const double occ = real(0.05, 0.95);
      for (std::size_t j = 0; j < n; ++j) cells[s * n + j] = coin(occ) ? Cell::Present : Cell::Absent;
    }
    return PresenceTensor(std::move(e), std::move(u), std::move(p), std::move(cells));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::span<const double> view(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

// Tensor from per-(entity, period) strings of '0', '1' and '.', one char per unit.
inline PresenceTensor tensor_from(const std::vector<std::vector<std::string>>& slices) {
  const std::size_t k = slices.size(), l = slices.front().size(), n = slices.front().front().size();
  std::vector<std::string> e(k), u(n), p(l);
  for (std::size_t i = 0; i < k; ++i) e[i] = "e" + std::to_string(i);
  for (std::size_t i = 0; i < n; ++i) u[i] = "u" + std::to_string(i);
  for (std::size_t i = 0; i < l; ++i) p[i] = "p" + std::to_string(i);
  std::vector<Cell> cells;
  for (const auto& entity : slices) {
    for (const auto& s : entity) {
      for (char c : s) cells.push_back(c == '1' ? Cell::Present : c == '0' ? Cell::Absent : Cell::Missing);
    }
  }
  return PresenceTensor(std::move(e), std::move(u), std::move(p), std::move(cells));
}

}  // namespace coocc::testing
