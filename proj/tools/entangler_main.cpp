// Command-line frontend. Batch only: every command reads its inputs, writes
// one JSON report (or CSV for study aggregates) and exits.
//
// Exit codes: 0 success / affirmative, 2 bad arguments or malformed input,
// 3 negative result (no entangler, witness found / not found, ineligible
// dims), 4 inconclusive.

#include "entangler/io.hpp"
#include "entangler/parallel.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>
#include <random>

namespace {

using entangler::io::json;
using entangler::io::Report;
namespace overlap = entangler::overlap;
namespace states = entangler::states;
namespace search = entangler::search;
namespace segre = entangler::segre;
namespace io = entangler::io;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitInconclusive = 4;

struct CommonOpts {
  int restarts = 64;
  int max_iters = 10000;
  double conv_tol = 1e-12;
  double witness_tol = 1e-6;
  double gap_tol = 1e-4;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;  // 0: ENTANGLER_THREADS or hardware concurrency
  std::string format = "json";
  std::string out;
};

void add_optimizer_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--restarts", o.restarts, "Multistart restart budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", o.max_iters, "Sweep cap per restart")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.conv_tol, "Convergence tolerance per sweep");
  cmd->add_option("--witness-tol", o.witness_tol,
                  "lambda >= 1 - witness_tol counts as a witness");
  cmd->add_option("--gap-tol", o.gap_tol,
                  "lambda <= 1 - gap_tol certifies numerically");
  cmd->add_option("--seed", o.seed, "RNG seed (default: system entropy)")
      ->each([&o](const std::string&) { o.seed_set = true; });
  cmd->add_option("--threads", o.threads,
                  "Worker cap (default: ENTANGLER_THREADS or hardware)");
}

overlap::OptimizerConfig make_config(CommonOpts& o) {
  if (!o.seed_set) {
    std::random_device entropy;
    o.seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
    o.seed_set = true;
  }
  overlap::OptimizerConfig cfg;
  cfg.restarts = o.restarts;
  cfg.max_iters = o.max_iters;
  cfg.conv_tol = o.conv_tol;
  cfg.witness_tol = o.witness_tol;
  cfg.gap_tol = o.gap_tol;
  cfg.seed = o.seed;
  return cfg;
}

void emit(const Report& report, const std::string& out_path) {
  const std::string text = report.to_json().dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) io::write_text_file(out_path, text);
}

json schmidt_payload(const states::PureState& psi) {
  const auto dec = states::schmidt(psi);
  json coeffs = json::array();
  for (Eigen::Index k = 0; k < dec.coefficients.size(); ++k)
    coeffs.push_back(dec.coefficients[k]);
  return json{{"coefficients", coeffs},
              {"entropy_bits", states::entropy_entanglement(psi)},
              {"geometric_entanglement", states::geometric_entanglement(psi)},
              {"schmidt_rank", states::schmidt_rank(psi)},
              {"is_product", segre::is_product(psi)}};
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int run(int argc, char** argv) {
  CLI::App app{
      "Universal-entangler toolkit: decides for which bipartite dimensions a "
      "universal entangler exists, certifies candidate gates numerically, "
      "hunts for witnesses and good entanglers, and measures guaranteed "
      "output entanglement."};
  app.require_subcommand(1);

  // exists
  int em = 0, en = 0;
  std::string exists_out;
  auto* cmd_exists = app.add_subcommand(
      "exists", "Decide whether a universal entangler exists on (m,n)");
  cmd_exists->add_option("m", em, "dimension of the first subsystem")->required();
  cmd_exists->add_option("n", en, "dimension of the second subsystem")->required();
  cmd_exists->add_option("--out", exists_out, "also write the report here");

  // certify / witness share their options
  CommonOpts cert_opts, wit_opts;
  std::string cert_file, wit_file;
  auto* cmd_certify = app.add_subcommand(
      "certify", "Certify a unitary from file as a universal entangler");
  cmd_certify->add_option("file", cert_file, "unitary JSON file")->required();
  add_optimizer_flags(cmd_certify, cert_opts);
  cmd_certify->add_option("--format", cert_opts.format, "json")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_certify->add_option("--out", cert_opts.out, "also write the report here");

  auto* cmd_witness = app.add_subcommand(
      "witness", "Maximize the product overlap and report the witness pair");
  cmd_witness->add_option("file", wit_file, "unitary JSON file")->required();
  add_optimizer_flags(cmd_witness, wit_opts);
  cmd_witness->add_option("--format", wit_opts.format, "json")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_witness->add_option("--out", wit_opts.out, "also write the report here");

  // search
  CommonOpts search_opts;
  search_opts.restarts = 16;
  int sm = 0, sn = 0;
  search::SearchBudget budget;
  std::string unitary_out;
  auto* cmd_search = app.add_subcommand(
      "search", "Search for a unitary maximizing guaranteed entanglement");
  cmd_search->add_option("m", sm)->required();
  cmd_search->add_option("n", sn)->required();
  cmd_search->add_option("--candidates", budget.candidates)
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--hill-steps", budget.hill_steps)
      ->check(CLI::NonNegativeNumber);
  cmd_search->add_option("--step-scale", budget.step_scale)
      ->check(CLI::NonNegativeNumber);
  cmd_search->add_option("--search-restarts", budget.search_restarts,
                         "Estimate budget inside the search")
      ->check(CLI::PositiveNumber);
  cmd_search->add_option("--final-restarts", budget.final_restarts,
                         "Re-certification budget for the winner")
      ->check(CLI::PositiveNumber);
  add_optimizer_flags(cmd_search, search_opts);
  cmd_search->add_option("--out", search_opts.out, "also write the report here");
  cmd_search->add_option("--unitary-out", unitary_out,
                         "write the winning unitary here (default: derived "
                         "from --out)");

  // haar-study
  CommonOpts study_opts;
  int hm = 0, hn = 0, samples = 100;
  auto* cmd_study = app.add_subcommand(
      "haar-study", "Certify a batch of Haar-random unitaries");
  cmd_study->add_option("m", hm)->required();
  cmd_study->add_option("n", hn)->required();
  cmd_study->add_option("--samples", samples)->check(CLI::PositiveNumber);
  add_optimizer_flags(cmd_study, study_opts);
  cmd_study->add_option("--format", study_opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_study->add_option("--out", study_opts.out, "also write the report here");

  // schmidt
  std::string state_file, schmidt_out;
  int qm = 0, qn = 0;
  auto* cmd_schmidt = app.add_subcommand(
      "schmidt", "Schmidt spectrum and entanglement measures of a state");
  cmd_schmidt->add_option("file", state_file, "state JSON file")->required();
  cmd_schmidt->add_option("m", qm, "override bipartition: first dimension");
  cmd_schmidt->add_option("n", qn, "override bipartition: second dimension");
  cmd_schmidt->add_option("--out", schmidt_out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? kExitOk : kExitBadInput;
  }
  Timer timer;

  if (*cmd_exists) {
    if (em < 1 || en < 1) {
      std::cerr << "exists: dimensions must be positive integers\n";
      return kExitBadInput;
    }
    const auto verdict =
        segre::exists_universal_entangler(states::BipartiteDims{em, en});
    Report report{io::kSchemaVersion, "exists",
                  json{{"m", em}, {"n", en}}, io::to_json(verdict),
                  timer.elapsed_ms()};
    emit(report, exists_out);
    return verdict.exists ? kExitOk : kExitNegative;
  }

  if (*cmd_certify || *cmd_witness) {
    const bool witness_mode = static_cast<bool>(*cmd_witness);
    CommonOpts& opts = witness_mode ? wit_opts : cert_opts;
    const std::string& file = witness_mode ? wit_file : cert_file;
    if (opts.format == "csv") {
      std::cerr << "certify/witness: csv output is only available for "
                   "haar-study aggregates\n";
      return kExitBadInput;
    }
    const auto cfg = make_config(opts);
    const auto gate = io::load_unitary(file);
    const auto cert = overlap::certify(gate, cfg, opts.threads);

    json config = io::to_json(cfg);
    config["input"] = file;
    json result = io::to_json(cert);
    if (witness_mode) {
      const bool found = cert.verdict == overlap::Verdict::kNotUniversalWitness;
      const auto& w = cert.estimate.input_witness;
      const states::PureState image(
          gate.matrix() * entangler::linalg::kron(w.left(), w.right()),
          gate.dims());
      result["witness_found"] = found;
      result["output_state_schmidt"] = schmidt_payload(image);
      Report report{io::kSchemaVersion, "witness", config, result,
                    timer.elapsed_ms()};
      emit(report, opts.out);
      return found ? kExitOk : kExitNegative;
    }
    Report report{io::kSchemaVersion, "certify", config, result,
                  timer.elapsed_ms()};
    emit(report, opts.out);
    switch (cert.verdict) {
      case overlap::Verdict::kUniversalEntangler:
        return kExitOk;
      case overlap::Verdict::kNotUniversalWitness:
        return kExitNegative;
      case overlap::Verdict::kInconclusive:
        return kExitInconclusive;
    }
    return kExitInconclusive;
  }

  if (*cmd_search) {
    if (sm < 1 || sn < 1) {
      std::cerr << "search: dimensions must be positive integers\n";
      return kExitBadInput;
    }
    const auto cfg = make_config(search_opts);
    const auto result = search::search_entangler(
        states::BipartiteDims{sm, sn}, cfg, budget, cfg.seed,
        search_opts.threads);

    std::string unitary_path = unitary_out;
    if (unitary_path.empty() && !search_opts.out.empty()) {
      std::filesystem::path p(search_opts.out);
      p.replace_extension(".unitary.json");
      unitary_path = p.string();
    }
    json payload = io::to_json(result);
    if (!unitary_path.empty()) {
      io::save_unitary(result.best_unitary, unitary_path);
      payload["unitary_file"] = unitary_path;
    }
    json config = io::to_json(cfg);
    Report report{io::kSchemaVersion, "search", config, payload,
                  timer.elapsed_ms()};
    emit(report, search_opts.out);
    return kExitOk;
  }

  if (*cmd_study) {
    if (hm < 1 || hn < 1) {
      std::cerr << "haar-study: dimensions must be positive integers\n";
      return kExitBadInput;
    }
    const auto cfg = make_config(study_opts);
    const auto result = search::haar_study(states::BipartiteDims{hm, hn},
                                           samples, cfg, cfg.seed,
                                           study_opts.threads);
    if (study_opts.format == "csv") {
      const std::string csv = io::study_to_csv(result);
      std::cout << csv;
      if (!study_opts.out.empty()) io::write_text_file(study_opts.out, csv);
      return kExitOk;
    }
    json config = io::to_json(cfg);
    config["samples"] = samples;
    Report report{io::kSchemaVersion, "haar-study", config,
                  io::to_json(result), timer.elapsed_ms()};
    emit(report, study_opts.out);
    return kExitOk;
  }

  if (*cmd_schmidt) {
    std::optional<states::BipartiteDims> dims_override;
    if (cmd_schmidt->count("m") != cmd_schmidt->count("n")) {
      std::cerr << "schmidt: provide both m and n or neither\n";
      return kExitBadInput;
    }
    if (cmd_schmidt->count("m") > 0) {
      if (qm < 1 || qn < 1) {
        std::cerr << "schmidt: dimensions must be positive integers\n";
        return kExitBadInput;
      }
      dims_override = states::BipartiteDims{qm, qn};
    }
    const auto psi = io::load_state(state_file, dims_override);
    json config{{"input", state_file},
                {"m", psi.dims().m},
                {"n", psi.dims().n}};
    Report report{io::kSchemaVersion, "schmidt", config, schmidt_payload(psi),
                  timer.elapsed_ms()};
    emit(report, schmidt_out);
    return kExitOk;
  }

  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const entangler::search::DimsNotEligible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
