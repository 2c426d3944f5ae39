#include "koop/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace koop {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<Eigen::VectorXd>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (static_cast<std::size_t>(row.size()) != header.size()) {
      throw IoError("csv row width " + std::to_string(row.size()) +
                    " does not match header width " + std::to_string(header.size()));
    }
    for (Eigen::Index i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row(i));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Eigen::MatrixXd read_csv(const std::filesystem::path& path,
                         std::vector<std::string>* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv '" + path.string() + "'");
  std::vector<std::string> head;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) head.push_back(cell);
  }
  if (header) *header = head;
  std::vector<std::vector<double>> data;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != head.size()) {
      throw IoError("csv row width mismatch in '" + path.string() + "'");
    }
    data.push_back(std::move(row));
  }
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(data.size()),
                      static_cast<Eigen::Index>(head.size()));
  for (std::size_t r = 0; r < data.size(); ++r) {
    for (std::size_t c = 0; c < data[r].size(); ++c) {
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = data[r][c];
    }
  }
  return mat;
}

}  // namespace koop
