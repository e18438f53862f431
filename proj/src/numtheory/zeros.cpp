#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zetaspec/error.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

namespace {

struct Bracket {
  double lo;
  double hi;
  double z_lo;
};

double bisect(Bracket b, double width, const ZOptions& options) {
  while (b.hi - b.lo > width) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (mid <= b.lo || mid >= b.hi) break;
    const double z_mid = riemann_siegel_z(mid, options);
    if (z_mid == 0.0) return mid;
    if (std::signbit(z_mid) == std::signbit(b.z_lo)) {
      b.lo = mid;
      b.z_lo = z_mid;
    } else {
      b.hi = mid;
    }
  }
  return 0.5 * (b.lo + b.hi);
}

}  // namespace

std::vector<ZetaZero> locate_zeros(double t_min, double t_max, const ZeroScanOptions& options) {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min >= 0.0) || !(t_min < t_max)) {
    throw DomainError("find_zeros: needs 0 <= t_min < t_max");
  }
  if (!(options.step > 0.0) || !(options.bracket_width > 0.0)) {
    throw DomainError("find_zeros: step and bracket width must be positive");
  }

  const std::size_t points = kernels::scan_points(t_min, t_max, options.step);
  std::vector<double> z(points);
  kernels::sample_z(t_min, t_max, options.step, options.z.switch_point, z);

  std::vector<Bracket> brackets;
  std::vector<double> exact;
  for (std::size_t i = 0; i + 1 < points; ++i) {
    const double a = kernels::scan_point(t_min, t_max, options.step, i);
    const double b = kernels::scan_point(t_min, t_max, options.step, i + 1);
    if (z[i + 1] == 0.0) {
      exact.push_back(b);
    } else if (z[i] != 0.0 && std::signbit(z[i]) != std::signbit(z[i + 1])) {
      brackets.push_back({a, b, z[i]});
    }
  }

  std::vector<double> ordinates(brackets.size());
  const auto count = static_cast<long>(brackets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    ordinates[static_cast<std::size_t>(i)] =
        bisect(brackets[static_cast<std::size_t>(i)], options.bracket_width, options.z);
  }
  ordinates.insert(ordinates.end(), exact.begin(), exact.end());
  std::sort(ordinates.begin(), ordinates.end());

  const long before = t_min > 0.0 ? zero_count(t_min) : 0;
  if (options.verify_count) {
    const long expected = zero_count(t_max) - before;
    if (expected != static_cast<long>(ordinates.size())) {
      throw MissedZeroError(ordinates.size(), expected,
                            "find_zeros: scan found " + std::to_string(ordinates.size()) + " zeros in (" +
                                std::to_string(t_min) + ", " + std::to_string(t_max) + "] but N(T) predicts " +
                                std::to_string(expected) + "; reduce the scan step");
    }
  }

  std::vector<ZetaZero> zeros;
  zeros.reserve(ordinates.size());
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    zeros.push_back({ordinates[i], static_cast<std::size_t>(before) + i + 1});
  }
  return zeros;
}

EventSequence find_zeros(double t_min, double t_max, const ZeroScanOptions& options) {
  std::vector<double> ordinates;
  for (const auto& zero : locate_zeros(t_min, t_max, options)) ordinates.push_back(zero.ordinate);
  return EventSequence(std::move(ordinates), EventKind::zeta_zeros, EventSource::computed);
}

}  // namespace zetaspec
