#include "pipeline/csv.hpp"

#include <cstdio>

#include "zetaspec/error.hpp"

namespace zetaspec::csv {

std::string number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string number(std::size_t value) { return std::to_string(value); }

Writer::Writer(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
    : out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw Error("cannot write " + path.string());
  std::string line;
  for (auto name : header) {
    line += name;
    line += ',';
  }
  line.back() = '\n';
  out_ << line;
}

}  // namespace zetaspec::csv
