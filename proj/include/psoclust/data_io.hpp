#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "psoclust/types.hpp"

namespace psoclust {

/// CSV or report text that cannot be parsed. Row and column are 1-based
/// when the error is tied to a cell, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t row = 0, std::size_t column = 0)
      : std::runtime_error(message), row_(row), column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Comma-separated numbers, '.' decimal point, optional single header row.
/// Blank lines are skipped. `source` only labels error messages.
DataSet parse_csv(std::string_view text, bool has_header, const std::string& source = "<text>");
DataSet load_csv(const std::filesystem::path& path, bool has_header);

/// Writes numbers with 17 significant digits so load_csv reproduces them exactly.
void write_csv(const DataSet& data, const std::filesystem::path& path);

/// Fisher's Iris measurements, 150 x 4.
DataSet builtin_iris();

/// Columns [offset, offset + dims).
DataSet subset_dims(const DataSet& data, std::size_t offset, std::size_t dims);

/// FNV-1a over the shape and the bit patterns of every value, as 16 hex digits.
std::string data_fingerprint(const DataSet& data);

}  // namespace psoclust
