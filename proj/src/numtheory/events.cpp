#include <cmath>
#include <string>

#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::zeta_zeros: return "zeta_zeros";
    case EventKind::primes: return "primes";
    case EventKind::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(EventSource source) {
  switch (source) {
    case EventSource::computed: return "computed";
    case EventSource::file: return "file";
    case EventSource::synthetic: return "synthetic";
  }
  return "synthetic";
}

EventSequence::EventSequence(std::vector<double> events, EventKind kind, EventSource source)
    : events_(std::move(events)), kind_(kind), source_(source) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (!std::isfinite(events_[i]) || events_[i] <= 0.0) {
      throw DomainError("event " + std::to_string(i) + " is not a positive finite location");
    }
    if (i > 0 && !(events_[i] > events_[i - 1])) {
      throw OrderingError("events must be strictly increasing (entry " + std::to_string(i) + ")");
    }
  }
}

}  // namespace zetaspec
