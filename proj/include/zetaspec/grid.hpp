#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zetaspec/numtheory.hpp"

namespace zetaspec {

/// Uniform sampling grid: sample k sits at origin + k*delta, k = 0..length-1.
struct GridSpec {
  double delta = 1.0;
  std::size_t length = 2;
  double origin = 0.0;

  /// Throws DomainError unless delta > 0 (finite) and length >= 2.
  void validate() const;

  double location(std::size_t index) const { return origin + static_cast<double>(index) * delta; }
  /// Total extent N*delta in location units; the frequency step is its reciprocal.
  double extent() const { return static_cast<double>(length) * delta; }

  /// Default grid for a sequence: length = ceil((max event - origin)/delta) + 1.
  static GridSpec covering(const EventSequence& events, double delta = 1.0, double origin = 0.0);
};

/// Nearest sample with ties rounded up; nullopt outside [0, length).
std::optional<std::size_t> sample_index(double x, const GridSpec& grid);

/// Indicator series: 1 at every sample hit by an event, 0 elsewhere.
class MangoldtSeries {
 public:
  /// Throws DomainError if an index is outside the grid.
  MangoldtSeries(GridSpec grid, std::span<const std::size_t> marked);

  std::span<const double> values() const noexcept { return values_; }
  const GridSpec& grid() const noexcept { return grid_; }
  /// Ascending, duplicates removed.
  std::span<const std::size_t> marked_indices() const noexcept { return marked_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  GridSpec grid_;
  std::vector<double> values_;
  std::vector<std::size_t> marked_;
};

MangoldtSeries build_series(const EventSequence& events, const GridSpec& grid);
/// Any order, duplicates allowed; marking is idempotent.
MangoldtSeries build_series(std::span<const double> locations, const GridSpec& grid);

}  // namespace zetaspec
