#include "psoclust/data_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace psoclust {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

DataSet parse_csv(std::string_view text, bool has_header, const std::string& source) {
  std::vector<std::string> names;
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool header_pending = has_header;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    const auto cells = split_commas(line);
    if (header_pending) {
      header_pending = false;
      cols = cells.size();
      for (auto cell : cells) names.emplace_back(cell);
      continue;
    }
    if (cols == 0) cols = cells.size();
    if (cells.size() != cols) {
      throw ParseError(source + ":" + std::to_string(line_no) + ": ragged row, expected " +
                           std::to_string(cols) + " columns, got " + std::to_string(cells.size()),
                       line_no, 0);
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string_view cell = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw ParseError(source + ": non-numeric cell '" + std::string(cell) + "' at (" +
                             std::to_string(line_no) + "," + std::to_string(c + 1) + ")",
                         line_no, c + 1);
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(source + ": no data rows");
  return DataSet(Matrix(rows, cols, std::move(values)), std::move(names));
}

DataSet load_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), has_header, path.string());
}

void write_csv(const DataSet& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto& names = data.feature_names();
  for (std::size_t c = 0; c < names.size(); ++c) out << (c ? "," : "") << names[c];
  if (!names.empty()) out << '\n';
  char buf[32];
  for (std::size_t p = 0; p < data.size(); ++p) {
    const auto row = data.point(p);
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      out << (c ? "," : "") << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

DataSet subset_dims(const DataSet& data, std::size_t offset, std::size_t dims) {
  if (dims < 1 || offset + dims > data.dim()) {
    throw ConfigError("subset: columns [" + std::to_string(offset) + ", " +
                      std::to_string(offset + dims) + ") out of range for d=" +
                      std::to_string(data.dim()));
  }
  Matrix cols(data.size(), dims);
  for (std::size_t p = 0; p < data.size(); ++p) {
    for (std::size_t c = 0; c < dims; ++c) cols(p, c) = data.points()(p, offset + c);
  }
  std::vector<std::string> names;
  if (!data.feature_names().empty()) {
    const auto first = data.feature_names().begin() + static_cast<std::ptrdiff_t>(offset);
    names.assign(first, first + static_cast<std::ptrdiff_t>(dims));
  }
  return DataSet(std::move(cols), std::move(names));
}

std::string data_fingerprint(const DataSet& data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (word >> (8 * i)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(data.size());
  mix(data.dim());
  for (double v : data.points().values()) mix(std::bit_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace psoclust
