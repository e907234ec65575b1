#pragma once

#include <string>
#include <vector>

namespace radon {

// flat numeric result table with a fixed column schema
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

// 17 significant digits, enough to round-trip a double
std::string format_real(double x);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);  // array of row objects, column order preserved
Table parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace radon
