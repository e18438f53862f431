#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace zetaspec {

enum class EventKind { zeta_zeros, primes, custom };
enum class EventSource { computed, file, synthetic };

std::string_view to_string(EventKind kind);
std::string_view to_string(EventSource source);

/// Strictly increasing list of positive event locations (zero ordinates, primes, ...).
class EventSequence {
 public:
  EventSequence() = default;

  /// Throws OrderingError unless `events` is strictly increasing, DomainError on a non-positive entry.
  EventSequence(std::vector<double> events, EventKind kind, EventSource source);

  std::span<const double> events() const noexcept { return events_; }
  EventKind kind() const noexcept { return kind_; }
  EventSource source() const noexcept { return source_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  double operator[](std::size_t i) const { return events_[i]; }

 private:
  std::vector<double> events_;
  EventKind kind_ = EventKind::custom;
  EventSource source_ = EventSource::synthetic;
};

/// A critical-line zero 1/2 + i*ordinate with its 1-based rank.
struct ZetaZero {
  double ordinate = 0.0;
  std::size_t index = 0;
};

// ---------------------------------------------------------------------------
// primes

/// Sieve of Eratosthenes; all primes <= limit. Throws DomainError for limit < 2.
EventSequence sieve_primes(std::uint64_t limit);

/// pi(x); 0 for x < 2.
std::uint64_t prime_count(std::uint64_t x);

// ---------------------------------------------------------------------------
// zeta and the Hardy Z function

/// zeta(s) by Euler-Maclaurin summation. Valid for any s != 1; relative accuracy ~1e-13 for |Im s| <= 1e4.
std::complex<double> zeta_euler_maclaurin(std::complex<double> s);

/// log Gamma(z) on the branch continuous in the right half-plane (Re z > 0).
std::complex<double> log_gamma(std::complex<double> z);

/// Riemann-Siegel theta from log Gamma; exact to rounding for every t >= 0.
double siegel_theta(double t);

/// Asymptotic expansion of theta through the t^-3 term; intended for t >= ~10.
double siegel_theta_asymptotic(double t);

struct ZOptions {
  /// Below this ordinate Z is evaluated as Re(e^{i theta} zeta(1/2+it)) with Euler-Maclaurin.
  double switch_point = 250.0;
};

/// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t. Throws DomainError for t < 0.
double riemann_siegel_z(double t, const ZOptions& options = {});

/// Riemann-Siegel main sum plus the C0..C4 remainder terms. Needs t >= 2*pi.
double riemann_siegel_z_asymptotic(double t);

/// N(T) = theta(T)/pi + 1 + S(T), rounded; number of zeros with ordinate in (0, T].
long zero_count(double t);

/// Smooth part (T/2pi) ln(T/2pi) - T/2pi + 7/8, unrounded.
double zero_count_smooth(double t);

struct ZeroScanOptions {
  double step = 0.05;
  /// Bisection stops once the bracket is at most this wide.
  double bracket_width = 1e-9;
  ZOptions z;
  /// Compare the count against zero_count and throw MissedZeroError on mismatch.
  bool verify_count = true;
};

/// Zeros with ordinate in (t_min, t_max], ascending and ranked.
std::vector<ZetaZero> locate_zeros(double t_min, double t_max, const ZeroScanOptions& options = {});

/// Same as locate_zeros, returned as an event sequence (kind zeta_zeros, source computed).
EventSequence find_zeros(double t_min, double t_max, const ZeroScanOptions& options = {});

// ---------------------------------------------------------------------------
// zero tables

/// One decimal ordinate per line; blank lines and '#' comments skipped; LF or CRLF.
EventSequence parse_zeros(std::istream& in);
EventSequence load_zeros(const std::filesystem::path& path);

}  // namespace zetaspec
