#include <algorithm>
#include <cmath>
#include <string>

#include "zetaspec/error.hpp"
#include "zetaspec/grid.hpp"

namespace zetaspec {

void GridSpec::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("grid: delta must be positive and finite");
  if (length < 2) throw DomainError("grid: length must be at least 2");
  if (!std::isfinite(origin)) throw DomainError("grid: origin must be finite");
}

GridSpec GridSpec::covering(const EventSequence& events, double delta, double origin) {
  GridSpec grid{delta, 2, origin};
  if (!events.empty()) {
    const double span = (events[events.size() - 1] - origin) / delta;
    if (span > 0.0) grid.length = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(span)) + 1);
  }
  grid.validate();
  return grid;
}

std::optional<std::size_t> sample_index(double x, const GridSpec& grid) {
  const double position = std::floor((x - grid.origin) / grid.delta + 0.5);
  if (!(position >= 0.0) || position >= static_cast<double>(grid.length)) return std::nullopt;
  return static_cast<std::size_t>(position);
}

MangoldtSeries::MangoldtSeries(GridSpec grid, std::span<const std::size_t> marked)
    : grid_(grid), values_(grid.length, 0.0) {
  grid_.validate();
  for (std::size_t index : marked) {
    if (index >= values_.size()) {
      throw DomainError("series: index " + std::to_string(index) + " outside grid of length " +
                        std::to_string(values_.size()));
    }
    values_[index] = 1.0;  // ln e
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0.0) marked_.push_back(i);
  }
}

MangoldtSeries build_series(const EventSequence& events, const GridSpec& grid) {
  return build_series(events.events(), grid);
}

MangoldtSeries build_series(std::span<const double> locations, const GridSpec& grid) {
  grid.validate();
  std::vector<std::size_t> marked;
  marked.reserve(locations.size());
  for (double x : locations) {
    if (const auto index = sample_index(x, grid)) marked.push_back(*index);
  }
  return MangoldtSeries(grid, marked);
}

}  // namespace zetaspec
