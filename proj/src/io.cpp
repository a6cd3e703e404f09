#include "entangler/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace entangler::io {

namespace {

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " +
                             e.what());
  }
  return j;
}

struct MatrixFilePayload {
  states::BipartiteDims dims;
  linalg::Vector data;  // row-major
};

MatrixFilePayload load_payload(const std::filesystem::path& path) {
  const json j = load_json_file(path);
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("data"))
    throw std::runtime_error(path.string() +
                             ": expected an object with m, n and data");
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (m < 1 || n < 1)
    throw std::runtime_error(path.string() + ": dimensions must be >= 1");
  return MatrixFilePayload{states::BipartiteDims{m, n},
                           complex_vector_from_json(j.at("data"))};
}

json payload_json(states::BipartiteDims dims, const linalg::Vector& data) {
  return json{{"m", dims.m}, {"n", dims.n},
              {"data", complex_vector_to_json(data)}};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

json complex_vector_to_json(const linalg::Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(json::array({v[i].real(), v[i].imag()}));
  return out;
}

linalg::Vector complex_vector_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("expected an array of [re, im]");
  linalg::Vector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::runtime_error("expected [re, im] pairs");
    v[i++] = linalg::Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  return v;
}

void save_unitary(const overlap::UnitaryGate& gate,
                  const std::filesystem::path& path) {
  write_text_file(
      path, payload_json(gate.dims(), linalg::flatten(gate.matrix())).dump(2) +
                "\n");
}

overlap::UnitaryGate load_unitary(const std::filesystem::path& path) {
  const auto payload = load_payload(path);
  const auto k = static_cast<Eigen::Index>(payload.dims.composite());
  if (payload.data.size() != k * k)
    throw std::runtime_error(
        path.string() + ": data has " + std::to_string(payload.data.size()) +
        " entries, expected (mn)^2 = " + std::to_string(k * k));
  // UnitaryGate verifies unitarity and reports max |U^dagger U - I|.
  return overlap::UnitaryGate(linalg::reshape(payload.data, k, k),
                              payload.dims);
}

states::PureState load_state(const std::filesystem::path& path,
                             std::optional<states::BipartiteDims> dims_override) {
  auto payload = load_payload(path);
  states::BipartiteDims dims = dims_override.value_or(payload.dims);
  if (dims.composite() != payload.dims.composite())
    throw std::invalid_argument(
        path.string() + ": cannot reinterpret a " +
        std::to_string(payload.dims.composite()) + "-amplitude state as " +
        std::to_string(dims.m) + "x" + std::to_string(dims.n));
  if (payload.data.size() != dims.composite())
    throw std::runtime_error(
        path.string() + ": data has " + std::to_string(payload.data.size()) +
        " entries, expected mn = " + std::to_string(dims.composite()));
  return states::PureState::normalized(std::move(payload.data), dims);
}

void save_state(const states::PureState& psi,
                const std::filesystem::path& path) {
  write_text_file(path,
                  payload_json(psi.dims(), psi.amplitudes()).dump(2) + "\n");
}

json to_json(const overlap::OptimizerConfig& cfg) {
  return json{{"restarts", cfg.restarts},
              {"max_iters", cfg.max_iters},
              {"conv_tol", cfg.conv_tol},
              {"witness_tol", cfg.witness_tol},
              {"gap_tol", cfg.gap_tol},
              {"seed", cfg.seed},
              {"min_converged_restarts", cfg.required_converged()}};
}

overlap::OptimizerConfig config_from_json(const json& j) {
  overlap::OptimizerConfig cfg;
  cfg.restarts = j.at("restarts").get<int>();
  cfg.max_iters = j.at("max_iters").get<int>();
  cfg.conv_tol = j.at("conv_tol").get<double>();
  cfg.witness_tol = j.at("witness_tol").get<double>();
  cfg.gap_tol = j.at("gap_tol").get<double>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("min_converged_restarts"))
    cfg.min_converged_restarts = j.at("min_converged_restarts").get<int>();
  return cfg;
}

json to_json(const segre::ExistenceVerdict& v) {
  return json{{"m", v.dims.m},
              {"n", v.dims.n},
              {"exists", v.exists},
              {"segre_dim", v.segre_dim},
              {"ambient_dim", v.ambient_dim},
              {"intersection_excess", v.intersection_excess},
              {"criterion", v.dims.criterion()}};
}

json to_json(const overlap::OverlapEstimate& e) {
  return json{
      {"lambda", e.lambda},
      {"input_witness",
       {{"left", complex_vector_to_json(e.input_witness.left())},
        {"right", complex_vector_to_json(e.input_witness.right())}}},
      {"output_witness",
       {{"left", complex_vector_to_json(e.output_witness.left())},
        {"right", complex_vector_to_json(e.output_witness.right())}}},
      {"iterations", e.iterations},
      {"restarts_used", e.restarts_used},
      {"converged", e.converged},
      {"converged_restarts", e.converged_restarts}};
}

json to_json(const overlap::CertificationReport& r) {
  return json{{"verdict", overlap::to_string(r.verdict)},
              {"estimate", to_json(r.estimate)},
              {"min_geometric_entanglement", r.min_geometric_entanglement},
              {"entropy_at_witness", r.entropy_at_witness},
              {"entropy_log_base", 2}};
}

json to_json(const search::HaarStudyResult& r) {
  json verdicts = json::array();
  for (const auto v : r.verdicts) verdicts.push_back(overlap::to_string(v));
  return json{{"m", r.dims.m},
              {"n", r.dims.n},
              {"samples", r.samples},
              {"seed", r.seed},
              {"sub_seeds", r.sub_seeds},
              {"lambda_values", r.lambda_values},
              {"verdicts", verdicts},
              {"fraction_universal", r.fraction_universal},
              {"entanglement_quantiles",
               {{"min", r.entanglement_quantiles[0]},
                {"q25", r.entanglement_quantiles[1]},
                {"median", r.entanglement_quantiles[2]},
                {"q75", r.entanglement_quantiles[3]},
                {"max", r.entanglement_quantiles[4]}}}};
}

json to_json(const search::SearchResult& r) {
  json trajectory = json::array();
  for (const auto& [step, value] : r.trajectory)
    trajectory.push_back(json{{"step", step}, {"value", value}});
  return json{{"m", r.best_unitary.dims().m},
              {"n", r.best_unitary.dims().n},
              {"seed", r.seed},
              {"budget",
               {{"candidates", r.budget.candidates},
                {"hill_steps", r.budget.hill_steps},
                {"step_scale", r.budget.step_scale},
                {"search_restarts", r.budget.search_restarts},
                {"final_restarts", r.budget.final_restarts}}},
              {"best_guaranteed_entanglement", r.best_guaranteed_entanglement},
              {"search_stage_lambda", r.search_stage_lambda},
              {"accepted_steps", r.accepted_steps},
              {"trajectory", trajectory},
              {"final_certification", to_json(r.final_report)}};
}

json Report::to_json() const {
  return json{{"schema_version", schema_version},
              {"command", command},
              {"config", config},
              {"result", result},
              {"wall_time_ms", wall_time_ms}};
}

Report Report::parse(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.result = j.at("result");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

std::string study_to_csv(const search::HaarStudyResult& r) {
  std::string out = "index,sub_seed,lambda,verdict\n";
  for (int i = 0; i < r.samples; ++i) {
    out += std::to_string(i) + "," + std::to_string(r.sub_seeds[i]) + "," +
           format_double(r.lambda_values[i]) + "," +
           overlap::to_string(r.verdicts[i]) + "\n";
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace entangler::io
