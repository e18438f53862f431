#include <cstdint>
#include <vector>

#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

namespace {

// Odd-only sieve: composite[i] describes 2i + 1.
std::vector<bool> odd_composites(std::uint64_t limit) {
  std::vector<bool> composite(limit / 2 + 1, false);
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  return composite;
}

}  // namespace

EventSequence sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be at least 2");
  const auto composite = odd_composites(limit);
  std::vector<double> primes{2.0};
  for (std::uint64_t n = 3; n <= limit; n += 2) {
    if (!composite[n / 2]) primes.push_back(static_cast<double>(n));
  }
  return EventSequence(std::move(primes), EventKind::primes, EventSource::computed);
}

std::uint64_t prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  const auto composite = odd_composites(x);
  std::uint64_t count = 1;
  for (std::uint64_t n = 3; n <= x; n += 2) count += composite[n / 2] ? 0 : 1;
  return count;
}

}  // namespace zetaspec
