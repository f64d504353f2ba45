#include "tdho/csv.hpp"

#include <fmt/format.h>

namespace tdho {

std::string csv_number(double v) { return fmt::format("{:.17g}", v); }

std::string csv_number(const std::optional<double>& v) {
  return v ? csv_number(*v) : std::string();
}

}  // namespace tdho

#include <fstream>
#include <ostream>

#include "tdho/errors.hpp"
#include "tdho/table.hpp"

namespace tdho {

void write_table(std::ostream& out, const Table& table) {
  for (const auto& line : table.metadata) out << "# " << line << '\n';
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_number(row[c]);
    if (r < table.text.size()) {
      for (const auto& cell : table.text[r]) out << ',' << cell;
    }
    out << '\n';
  }
}

void write_table(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  write_table(out, table);
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace tdho
