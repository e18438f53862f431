#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

namespace zetaspec::csv {

/// 15 significant digits, '.' decimal separator, independent of the global locale.
std::string number(double value);
std::string number(std::size_t value);

class Writer {
 public:
  Writer(const std::filesystem::path& path, std::initializer_list<std::string_view> header);

  template <typename... Fields>
  void row(const Fields&... fields) {
    std::string line;
    ((append(line, number(fields))), ...);
    line.back() = '\n';
    out_ << line;
    ++rows_;
  }

  std::size_t rows() const noexcept { return rows_; }

 private:
  static void append(std::string& line, const std::string& field) {
    line += field;
    line += ',';
  }

  std::ofstream out_;
  std::size_t rows_ = 0;
};

}  // namespace zetaspec::csv
