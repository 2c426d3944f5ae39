#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "koop/errors.hpp"

namespace koop {

// Formats a double with full round-trip precision ("%.17g").
std::string format_double(double value);

// UTF-8 CSV with a header row; every cell full double precision. Output is a
// pure function of the data, so reruns are byte-identical.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<Eigen::VectorXd>& rows);

Eigen::MatrixXd read_csv(const std::filesystem::path& path,
                         std::vector<std::string>* header = nullptr);

}  // namespace koop
