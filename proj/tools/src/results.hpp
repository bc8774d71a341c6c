#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gals::cli {

std::string format_double(double value);

/// Assembles a delimited result table: one header, one row per run, then a
/// keyed `# key = value` footer block (exactly one). Cells and footer values
/// are formatted deterministically so identical campaigns produce identical
/// bytes.
class ResultWriter {
 public:
  explicit ResultWriter(const std::string& format);  // "csv" | "tsv"

  void set_header(std::vector<std::string> columns);
  void add_row(const std::vector<std::string>& cells);

  void add_footer(const std::string& key, const std::string& value);
  void add_footer(const std::string& key, const char* value) { add_footer(key, std::string(value)); }
  void add_footer(const std::string& key, std::int64_t value) { add_footer(key, std::to_string(value)); }
  void add_footer(const std::string& key, std::uint64_t value) { add_footer(key, std::to_string(value)); }
  void add_footer(const std::string& key, int value) { add_footer(key, std::to_string(value)); }
  void add_footer(const std::string& key, double value) { add_footer(key, format_double(value)); }
  void add_footer(const std::string& key, bool value) { add_footer(key, std::string(value ? "true" : "false")); }

  std::string str() const;

 private:
  char separator_;
  std::size_t columns_ = 0;
  std::vector<std::string> lines_;
  std::vector<std::pair<std::string, std::string>> footer_;
};

inline std::string cell(std::optional<std::int64_t> value) {
  return value ? std::to_string(*value) : std::string();
}

}  // namespace gals::cli
