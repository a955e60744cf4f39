#include "cli/csv.hpp"

#include <sstream>

#include "sirchaos.h"

namespace sircli {

namespace {

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

CsvWriter::CsvWriter(const std::string& path) : out_(path), path_(path) {
  if (!out_) throw IoError("cannot open '" + path + "' for writing");
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::columns(const std::vector<std::string>& names) {
  out_ << join(names) << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  out_ << join(cells) << "\n";
}

void CsvWriter::close() {
  out_.flush();
  if (!out_) throw IoError("write failure on '" + path_ + "'");
  out_.close();
}

void write_provenance(CsvWriter& w, const RunConfig& cfg) {
  w.comment(std::string("sirchaos ") + sir_version());
  std::istringstream lines(render_config(cfg));
  std::string line;
  while (std::getline(lines, line)) {
    // the worker count does not affect the result; omitting it keeps
    // outputs byte-identical across worker counts
    if (line.rfind("run.workers", 0) == 0) continue;
    w.comment(line);
  }
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");

  CsvTable table;
  std::string line;
  int lineno = 0;
  bool have_columns = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string c = line.substr(1);
      if (!c.empty() && c[0] == ' ') c = c.substr(1);
      table.comments.push_back(c);
      continue;
    }
    if (!have_columns) {
      table.columns = split(line);
      if (table.columns.empty())
        throw UsageError(path + ": row " + std::to_string(lineno) +
                         ": empty column header");
      have_columns = true;
      continue;
    }
    auto cells = split(line);
    if (cells.size() != table.columns.size())
      throw UsageError(path + ": row " + std::to_string(lineno) + ": expected " +
                       std::to_string(table.columns.size()) + " cells, got " +
                       std::to_string(cells.size()));
    table.rows.push_back(std::move(cells));
  }
  if (!have_columns)
    throw UsageError(path + ": no column header line found");
  return table;
}

double cell_number(const CsvTable& table, std::size_t row, int col) {
  const std::string& text = table.rows[row][static_cast<std::size_t>(col)];
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw UsageError("");
    return v;
  } catch (...) {
    throw UsageError("row " + std::to_string(row + 1) + ": not a number: '" +
                     text + "'");
  }
}

}  // namespace sircli
