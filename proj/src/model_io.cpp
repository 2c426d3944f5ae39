#include "koop/model_io.hpp"

#include <fstream>

namespace koop {

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json arr = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) arr.push_back(m(r, c));
  }
  return arr;
}

Eigen::MatrixXd matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows * cols) {
    throw IoError("matrix field has " + std::to_string(j.size()) +
                  " entries, expected " + std::to_string(rows * cols));
  }
  Eigen::MatrixXd m(rows, cols);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j[i++].get<double>();
  }
  return m;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Eigen::VectorXd vector_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("expected a JSON array for a vector field");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j[i].get<double>();
  return v;
}

Json bank_to_json(const UtilityBank& bank) {
  Json j;
  j["family"] = "default-v1";
  j["robots"] = bank.n_robots();
  Json goals = Json::array();
  Json goal_velocities = Json::array();
  for (int i = 0; i < bank.n_robots(); ++i) {
    goals.push_back({bank.goals()(i, 0), bank.goals()(i, 1)});
    goal_velocities.push_back(
        {bank.goal_velocities()(i, 0), bank.goal_velocities()(i, 1)});
  }
  j["goals"] = goals;
  j["goal_velocities"] = goal_velocities;
  j["shape"] = Json{{"collision_scale", bank.shape().collision_scale},
                    {"collision_eps", bank.shape().collision_eps},
                    {"speed_eps", bank.shape().speed_eps},
                    {"align_eps", bank.shape().align_eps}};
  return j;
}

UtilityBank bank_from_json(const Json& j) {
  if (j.value("family", "") != std::string("default-v1")) {
    throw IoError("unknown observable bank family '" + j.value("family", "") + "'");
  }
  const int n = j.at("robots").get<int>();
  auto read_pairs = [n](const Json& arr, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
      throw IoError(std::string(what) + " must list one [x, y] pair per robot");
    }
    Eigen::MatrixXd m(n, 2);
    for (int i = 0; i < n; ++i) {
      m(i, 0) = arr[i].at(0).get<double>();
      m(i, 1) = arr[i].at(1).get<double>();
    }
    return m;
  };
  Eigen::MatrixXd goals = read_pairs(j.at("goals"), "goals");
  Eigen::MatrixXd goal_velocities =
      j.contains("goal_velocities") ? read_pairs(j.at("goal_velocities"), "goal_velocities")
                                    : Eigen::MatrixXd::Zero(n, 2);
  UtilityShape shape;
  if (j.contains("shape")) {
    const Json& s = j.at("shape");
    shape.collision_scale = s.value("collision_scale", shape.collision_scale);
    shape.collision_eps = s.value("collision_eps", shape.collision_eps);
    shape.speed_eps = s.value("speed_eps", shape.speed_eps);
    shape.align_eps = s.value("align_eps", shape.align_eps);
  }
  return UtilityBank(n, goals, goal_velocities, shape);
}

Json model_to_json(const ModelFile& file) {
  const ModelDims d = model_dims(file.model);
  Json j;
  j["schema"] = "koopman-model/1";
  j["kind"] = to_string(model_kind(file.model));
  j["dims"] = Json{{"n1", d.n1}, {"n2", d.n2}, {"m", d.m}};
  j["bank"] = bank_to_json(file.bank);
  if (const auto* bi = std::get_if<BilinearKoopmanModel>(&file.model)) {
    j["x0"] = Json{{"z1", vector_to_json(bi->x0.z1)}, {"z2", vector_to_json(bi->x0.z2)}};
    j["blocks"] = Json{{"A21", matrix_to_json(bi->A21)}, {"A22", matrix_to_json(bi->A22)},
                       {"B2", matrix_to_json(bi->B2)},   {"f0", vector_to_json(bi->f0)},
                       {"Phi1", matrix_to_json(bi->Phi1)}, {"Phi2", matrix_to_json(bi->Phi2)},
                       {"Phi3", matrix_to_json(bi->Phi3)}, {"Phi4", matrix_to_json(bi->Phi4)},
                       {"Phi5", matrix_to_json(bi->Phi5)}};
  } else {
    const auto& lin = std::get<LinearKoopmanModel>(file.model);
    j["blocks"] = Json{{"A21", matrix_to_json(lin.A21)},
                       {"A22", matrix_to_json(lin.A22)},
                       {"B2", matrix_to_json(lin.B2)}};
  }
  j["estimator"] = Json{{"rho", file.rho},
                        {"p0_scale", file.p0_scale},
                        {"reset_p0", file.reset_p0},
                        {"reset_p1", file.reset_p1}};
  j["reset_steps"] = file.reset_steps;
  return j;
}

ModelFile model_from_json(const Json& j) {
  if (j.value("schema", "") != std::string("koopman-model/1")) {
    throw IoError("unrecognized model schema '" + j.value("schema", "") + "'");
  }
  const Json& dims_j = j.at("dims");
  const ModelDims dims{dims_j.at("n1").get<int>(), dims_j.at("n2").get<int>(),
                       dims_j.at("m").get<int>()};
  const ModelKind kind = model_kind_from_string(j.at("kind").get<std::string>());
  const Json& blocks = j.at("blocks");

  KoopmanModel model;
  if (kind == ModelKind::Linear) {
    LinearKoopmanModel lin;
    lin.A21 = matrix_from_json(blocks.at("A21"), dims.n2, dims.n1);
    lin.A22 = matrix_from_json(blocks.at("A22"), dims.n2, dims.n2);
    lin.B2 = matrix_from_json(blocks.at("B2"), dims.n2, dims.m);
    model = std::move(lin);
  } else {
    const BilinearLayout l = BilinearLayout::make(dims.n1, dims.n2, dims.m);
    BilinearKoopmanModel bi;
    bi.A21 = matrix_from_json(blocks.at("A21"), dims.n2, dims.n1);
    bi.A22 = matrix_from_json(blocks.at("A22"), dims.n2, dims.n2);
    bi.B2 = matrix_from_json(blocks.at("B2"), dims.n2, dims.m);
    bi.f0 = vector_from_json(blocks.at("f0"));
    bi.Phi1 = matrix_from_json(blocks.at("Phi1"), l.size_g1, dims.n2);
    bi.Phi2 = matrix_from_json(blocks.at("Phi2"), l.size_g2, dims.n2);
    bi.Phi3 = matrix_from_json(blocks.at("Phi3"), l.size_g3, dims.n2);
    bi.Phi4 = matrix_from_json(blocks.at("Phi4"), l.size_g4, dims.n2);
    bi.Phi5 = matrix_from_json(blocks.at("Phi5"), l.size_g5, dims.n2);
    bi.x0.z1 = vector_from_json(j.at("x0").at("z1"));
    bi.x0.z2 = vector_from_json(j.at("x0").at("z2"));
    model = std::move(bi);
  }

  ModelFile file{std::move(model), bank_from_json(j.at("bank"))};
  if (j.contains("estimator")) {
    const Json& e = j.at("estimator");
    file.rho = e.value("rho", file.rho);
    file.p0_scale = e.value("p0_scale", file.p0_scale);
    file.reset_p0 = e.value("reset_p0", file.reset_p0);
    file.reset_p1 = e.value("reset_p1", file.reset_p1);
  }
  if (j.contains("reset_steps")) {
    file.reset_steps = j.at("reset_steps").get<std::vector<int>>();
  }
  return file;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError("failed to parse '" + path.string() + "': " + e.what());
  }
  return j;
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  write_json(path, model_to_json(file));
}

ModelFile load_model(const std::filesystem::path& path) {
  return model_from_json(load_json(path));
}

Json aggregate_to_json(const SeriesAggregate& agg) {
  return Json{{"rms", agg.rms},
              {"maxabs", agg.maxabs},
              {"rmse_per_obs", vector_to_json(agg.rmse_per_obs)},
              {"maxabs_per_obs", vector_to_json(agg.maxabs_per_obs)}};
}

Json validation_summary_to_json(const ValidationSummary& summary) {
  Json j;
  j["schema"] = "koopman-validation/1";
  j["test_seeds"] = summary.seeds;
  j["pooled"] = Json{{"one_step", aggregate_to_json(summary.pooled_one_step)},
                     {"free_run", aggregate_to_json(summary.pooled_free_run)}};
  Json per_seed = Json::array();
  for (std::size_t i = 0; i < summary.per_seed.size(); ++i) {
    const ValidationReport& r = summary.per_seed[i];
    per_seed.push_back(Json{{"seed", summary.seeds[i]},
                            {"horizon", r.horizon},
                            {"rollout_diverged", r.rollout_diverged},
                            {"one_step", aggregate_to_json(r.neg_eta_agg)},
                            {"free_run", aggregate_to_json(r.z_tilde_agg)}});
  }
  j["per_seed"] = per_seed;
  return j;
}

}  // namespace koop
