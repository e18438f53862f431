#include <cmath>

#include "zetaspec/analysis.hpp"
#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

double pnt_ratio(std::uint64_t x) {
  if (x < 2) throw DomainError("pnt_ratio: x must be at least 2");
  const auto dx = static_cast<double>(x);
  return static_cast<double>(prime_count(x)) * std::log(dx) / dx;
}

}  // namespace zetaspec
