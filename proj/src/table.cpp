#include "pdc/table.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace pdc {

void Table::add_row(std::initializer_list<double> values) {
  if (values.size() != columns.size()) {
    throw std::invalid_argument("row width " + std::to_string(values.size()) +
                                " does not match " +
                                std::to_string(columns.size()) + " columns");
  }
  rows.emplace_back(values);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  if (t.columns.empty()) {
    throw std::invalid_argument("table has no columns");
  }
  for (const auto& c : t.comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_number(row[i]);
    }
    os << "\n";
  }
}

void write_csv_file(const std::string& path, const Table& t) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(os, t);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace pdc
