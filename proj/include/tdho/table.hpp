#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tdho {

// A CSV table: '#'-prefixed metadata lines, a header row, numeric rows.
// Absent values are written as empty fields. When text is non-empty it holds
// one entry per row, written after that row's numeric cells.
struct Table {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::vector<std::string>> text;
};

void write_table(std::ostream& out, const Table& table);
// IoError when the file cannot be written.
void write_table(const std::filesystem::path& path, const Table& table);

}  // namespace tdho
