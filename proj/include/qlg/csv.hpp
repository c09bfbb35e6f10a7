#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qlg {

/// Rectangular numeric table with named columns. All values must be finite
/// by the time it is serialized.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Throws if the table is ragged or contains non-finite values.
void validate(const CsvTable& table);

/// One value formatted with 17 significant digits ("%.16e"), locale-free.
std::string format_value(double v);

/// Comma-separated, '.' decimal point, LF line endings, header first.
/// Identical tables always serialize to identical bytes.
std::string to_csv_string(const CsvTable& table);

void write_csv_file(const CsvTable& table, const std::filesystem::path& path);

}  // namespace qlg
