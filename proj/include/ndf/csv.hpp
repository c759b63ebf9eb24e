#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ndf/linalg.hpp"

namespace ndf::csv {

/// 17 significant digits, enough to round-trip any double.
inline std::string format(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const {
    write_row(os, header);
    for (const auto& row : rows) write_row(os, row);
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

 private:
  static void write_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  }
};

/// Square matrix with a header row of column indices.
inline Table matrix_table(const Matrix& m) {
  Table t;
  for (Eigen::Index j = 0; j < m.cols(); ++j) t.header.push_back(std::to_string(j));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace ndf::csv
