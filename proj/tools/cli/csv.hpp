#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace sircli {

/// CSV with `#` provenance comments, one column-name line, then data rows.
/// Doubles are printed with 17 significant digits.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void comment(const std::string& line);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);
  void close();  // throws IoError on flush failure

 private:
  std::ofstream out_;
  std::string path_;
};

/// Writes the standard provenance block: tool version, then the full
/// resolved configuration (strip the leading "# " to re-parse).
void write_provenance(CsvWriter& w, const RunConfig& cfg);

struct CsvTable {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

/// Rejects malformed files naming the offending 1-based row number.
CsvTable read_csv(const std::string& path);

double cell_number(const CsvTable& table, std::size_t row, int col);

}  // namespace sircli
