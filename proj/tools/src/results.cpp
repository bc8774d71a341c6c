#include "results.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gals::cli {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

ResultWriter::ResultWriter(const std::string& format) {
  if (format == "csv") {
    separator_ = ',';
  } else if (format == "tsv") {
    separator_ = '\t';
  } else {
    throw std::invalid_argument("ResultWriter: unknown format '" + format + "'");
  }
}

void ResultWriter::set_header(std::vector<std::string> columns) {
  if (columns_ != 0) throw std::logic_error("ResultWriter: header already set");
  columns_ = columns.size();
  std::string line;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) line.push_back(separator_);
    line += columns[i];
  }
  lines_.push_back(std::move(line));
}

void ResultWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("ResultWriter: row width mismatch");
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line.push_back(separator_);
    line += cells[i];
  }
  lines_.push_back(std::move(line));
}

void ResultWriter::add_footer(const std::string& key, const std::string& value) {
  footer_.emplace_back(key, value);
}

std::string ResultWriter::str() const {
  std::ostringstream out;
  for (const auto& line : lines_) out << line << '\n';
  for (const auto& [key, value] : footer_) out << "# " << key << " = " << value << '\n';
  return out.str();
}

}  // namespace gals::cli
