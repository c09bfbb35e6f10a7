#include "qlg/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace qlg {

void validate(const CsvTable& table) {
  if (table.header.empty()) {
    throw std::invalid_argument("csv: table has no columns");
  }
  for (const std::string& name : table.header) {
    if (name.empty() || name.find_first_of(",\n\r") != std::string::npos) {
      throw std::invalid_argument("csv: bad column name '" + name + "'");
    }
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size()) {
      throw std::invalid_argument("csv: ragged row " + std::to_string(r));
    }
    for (const double v : table.rows[r]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("csv: non-finite value in row " +
                                    std::to_string(r));
      }
    }
  }
}

std::string format_value(double v) {
  // to_chars is locale-independent by definition; 16 digits after the point
  // round-trips every double exactly.
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

std::string to_csv_string(const CsvTable& table) {
  validate(table);
  std::string out;
  out.reserve(32 + table.rows.size() * 24 * table.header.size());
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c > 0) {
      out += ',';
    }
    out += table.header[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

void write_csv_file(const CsvTable& table, const std::filesystem::path& path) {
  const std::string body = to_csv_string(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("csv: cannot open '" + path.string() + "' for writing");
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) {
    throw std::runtime_error("csv: write failed for '" + path.string() + "'");
  }
}

}  // namespace qlg
