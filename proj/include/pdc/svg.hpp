#ifndef PDC_SVG_HPP
#define PDC_SVG_HPP

#include <string>
#include <vector>

#include "pdc/table.hpp"

namespace pdc {

// Minimal standalone SVG line chart: one polyline per selected y column,
// plotted against the x column, with tick labels, axis titles (the column
// names) and a small legend. No external dependencies; the output is a
// self-contained .svg file.
struct ChartSpec {
  std::size_t x_column = 0;
  std::vector<std::size_t> y_columns;  // empty = all columns except x
  std::string title;
  int width = 720;
  int height = 480;
};

std::string render_line_chart(const Table& t, const ChartSpec& spec);

// Throws std::runtime_error if the file cannot be opened,
// std::invalid_argument for out-of-range column indices or an empty table.
void write_svg_file(const std::string& path, const Table& t,
                    const ChartSpec& spec);

}  // namespace pdc

#endif  // PDC_SVG_HPP
