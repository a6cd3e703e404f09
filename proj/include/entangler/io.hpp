#pragma once

#include "entangler/search.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

// Single on-disk format for unitaries and states: a JSON object with integer
// fields m, n and a row-major "data" list of [re, im] pairs. A unitary has
// (mn)^2 entries, a state mn. Reports share one envelope (schema_version,
// command, config, result, wall_time_ms) so they round-trip through parse().
namespace entangler::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json complex_vector_to_json(const linalg::Vector& v);
linalg::Vector complex_vector_from_json(const json& j);

void save_unitary(const overlap::UnitaryGate& gate,
                  const std::filesystem::path& path);
overlap::UnitaryGate load_unitary(const std::filesystem::path& path);

/// Loads a state file (data length mn), normalizing the amplitudes.
/// dims_override reinterprets the bipartition, e.g. reading a 12-amplitude
/// state as 2x6 instead of the header's 3x4; the product m*n must match.
states::PureState load_state(const std::filesystem::path& path,
                             std::optional<states::BipartiteDims> dims_override = {});
void save_state(const states::PureState& psi,
                const std::filesystem::path& path);

json to_json(const overlap::OptimizerConfig& cfg);
overlap::OptimizerConfig config_from_json(const json& j);

json to_json(const segre::ExistenceVerdict& v);
json to_json(const overlap::OverlapEstimate& e);
json to_json(const overlap::CertificationReport& r);
json to_json(const search::HaarStudyResult& r);
json to_json(const search::SearchResult& r);

/// Report envelope shared by every CLI command.
struct Report {
  std::string schema_version = kSchemaVersion;
  std::string command;
  json config;
  json result;
  double wall_time_ms = 0.0;

  json to_json() const;
  static Report parse(const json& j);

  bool operator==(const Report&) const = default;
};

/// Fixed-header CSV for study aggregates: one row per sample.
/// Header: index,sub_seed,lambda,verdict
std::string study_to_csv(const search::HaarStudyResult& r);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace entangler::io
