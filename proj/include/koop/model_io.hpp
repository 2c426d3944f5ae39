#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "koop/model.hpp"
#include "koop/rls.hpp"
#include "koop/utility_bank.hpp"
#include "koop/validation.hpp"

namespace koop {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Eigen::MatrixXd& m);  // row-major flat array
Eigen::MatrixXd matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols);
Json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const Json& j);

Json bank_to_json(const UtilityBank& bank);
UtilityBank bank_from_json(const Json& j);

// A persisted model: parameter blocks, the observable bank it was identified
// against, the estimator hyperparameters, and the reset history.
struct ModelFile {
  KoopmanModel model;
  UtilityBank bank;
  double rho = 1.0;
  double p0_scale = 1e4;
  double reset_p0 = 1e4;
  double reset_p1 = 1e-6;
  std::vector<int> reset_steps;
};

Json model_to_json(const ModelFile& file);
ModelFile model_from_json(const Json& j);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

Json aggregate_to_json(const SeriesAggregate& agg);
Json validation_summary_to_json(const ValidationSummary& summary);

void write_json(const std::filesystem::path& path, const Json& j);
Json load_json(const std::filesystem::path& path);

}  // namespace koop
