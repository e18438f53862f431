#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

EventSequence parse_zeros(std::istream& in) {
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_no = 0;
  std::size_t previous_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw ParseError(line_no, "not a decimal ordinate: '" + std::string(text) + "'");
    }
    if (!(value > 0.0) || !std::isfinite(value)) throw ParseError(line_no, "ordinate must be positive");
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw OrderingError("line " + std::to_string(line_no) + ": ordinate " + std::string(text) +
                          " does not exceed the one on line " + std::to_string(previous_line));
    }
    ordinates.push_back(value);
    previous_line = line_no;
  }
  return EventSequence(std::move(ordinates), EventKind::zeta_zeros, EventSource::file);
}

EventSequence load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open zero table " + path.string());
  return parse_zeros(in);
}

}  // namespace zetaspec
