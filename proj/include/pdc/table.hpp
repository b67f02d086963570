#ifndef PDC_TABLE_HPP
#define PDC_TABLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdc {

// A rectangular numeric result table plus free-form comment lines
// (used to echo the resolved run configuration). Serializes to CSV with
// `#`-prefixed comments and 12-significant-digit numbers, so a written
// file reproduces the run and the values are round-trippable.
struct Table {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  // Throws std::invalid_argument unless values.size() == columns.size().
  void add_row(std::initializer_list<double> values);
};

// Formats one double with 12 significant digits (shortest form, "%.12g").
std::string format_number(double v);

// Throws std::invalid_argument if the table declares no columns.
void write_csv(std::ostream& os, const Table& t);

// Throws std::runtime_error if the file cannot be opened.
void write_csv_file(const std::string& path, const Table& t);

}  // namespace pdc

#endif  // PDC_TABLE_HPP
