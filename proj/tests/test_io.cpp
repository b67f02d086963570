#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pdc/svg.hpp"
#include "pdc/table.hpp"

using namespace pdc;

namespace {

Table sample_table() {
  Table t;
  t.comments = {"scenario = demo", "seed = 1"};
  t.columns = {"t", "occupation", "pairing"};
  t.add_row({0.0, 0.3, 0.0});
  t.add_row({0.5, 1.25, 0.75});
  t.add_row({1.0, 3.0546875e-4, -2.0});
  return t;
}

}  // namespace

TEST_CASE("format_number keeps 12 significant digits and round-trips") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  const double value = 0.50000027777714691;
  const std::string text = format_number(value);
  const double back = std::stod(text);
  CHECK(std::abs(back - value) <= 1e-12 * value);
  CHECK(format_number(-2.0) == "-2");
}

TEST_CASE("CSV output carries comments, header, and formatted rows") {
  std::ostringstream out;
  write_csv(out, sample_table());
  const std::string text = out.str();

  CHECK(text.find("# scenario = demo\n") != std::string::npos);
  CHECK(text.find("# seed = 1\n") != std::string::npos);
  CHECK(text.find("t,occupation,pairing\n") != std::string::npos);
  CHECK(text.find("0,0.3,0\n") != std::string::npos);
  CHECK(text.find("0.5,1.25,0.75\n") != std::string::npos);
  CHECK(text.find("0.00030546875,-2\n") != std::string::npos);
  // Comments precede the header.
  CHECK(text.find("# scenario") < text.find("t,occupation"));
}

TEST_CASE("CSV rows must match the declared columns") {
  Table t;
  t.columns = {"a", "b"};
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(t.add_row({1.0, 2.0, 3.0}), std::invalid_argument);
  std::ostringstream out;
  Table empty;
  CHECK_THROWS_AS(write_csv(out, empty), std::invalid_argument);
}

TEST_CASE("write_csv_file reports unwritable paths") {
  CHECK_THROWS_AS(write_csv_file("/nonexistent-dir/out.csv", sample_table()),
                  std::runtime_error);
}

TEST_CASE("SVG chart contains the expected structure") {
  ChartSpec spec;
  spec.x_column = 0;
  spec.y_columns = {1, 2};
  spec.title = "demo chart";
  const std::string svg = render_line_chart(sample_table(), spec);

  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.rfind("<?xml", 0) == 0);
  // One polyline per series plus legend entries naming them.
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("occupation") != std::string::npos);
  CHECK(svg.find("pairing") != std::string::npos);
  CHECK(svg.find("demo chart") != std::string::npos);
  CHECK(svg.find(">t<") != std::string::npos);  // x-axis title

  // Empty y-column list selects every non-x column.
  ChartSpec all;
  all.x_column = 0;
  const std::string svg_all = render_line_chart(sample_table(), all);
  CHECK(svg_all.find("occupation") != std::string::npos);
  CHECK(svg_all.find("pairing") != std::string::npos);
}

TEST_CASE("SVG rendering validates its inputs") {
  ChartSpec bad_x;
  bad_x.x_column = 5;
  bad_x.y_columns = {1};
  CHECK_THROWS_AS(render_line_chart(sample_table(), bad_x),
                  std::invalid_argument);

  ChartSpec bad_y;
  bad_y.x_column = 0;
  bad_y.y_columns = {7};
  CHECK_THROWS_AS(render_line_chart(sample_table(), bad_y),
                  std::invalid_argument);

  Table empty;
  empty.columns = {"t", "y"};
  ChartSpec ok;
  ok.x_column = 0;
  ok.y_columns = {1};
  CHECK_THROWS_AS(render_line_chart(empty, ok), std::invalid_argument);
}

TEST_CASE("SVG file writer round-trips to disk") {
  ChartSpec spec;
  spec.x_column = 0;
  spec.y_columns = {1};
  const std::string path = "test_io_chart.svg";
  write_svg_file(path, sample_table(), spec);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("</svg>") != std::string::npos);
  in.close();
  std::remove(path.c_str());
}
