#pragma once

#include "entangler/overlap.hpp"
#include "entangler/segre.hpp"

#include <array>
#include <vector>

namespace entangler::search {

using overlap::CertificationReport;
using overlap::OptimizerConfig;
using overlap::UnitaryGate;
using overlap::Verdict;
using states::BipartiteDims;

/// Requested search dimensions admit no universal entangler, so the search
/// is refused up front.
class DimsNotEligible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Haar-distributed k x k unitary: QR of a Ginibre matrix with the
/// R-diagonal phase fix.
linalg::Matrix haar_unitary(int k, std::uint64_t seed);

/// Monte Carlo study of how often a random unitary certifies as a
/// universal entangler.
struct HaarStudyResult {
  BipartiteDims dims;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> sub_seeds;   // per-sample unitary seeds
  std::vector<double> lambda_values;      // estimated overlap per sample
  std::vector<Verdict> verdicts;          // certify() verdict per sample
  /// Share of samples with lambda <= 1 - gap_tol.
  double fraction_universal = 0.0;
  /// min, 25%, median, 75%, max of the guaranteed entanglement 1 - lambda^2.
  std::array<double, 5> entanglement_quantiles{};
};

HaarStudyResult haar_study(BipartiteDims dims, int samples,
                           const OptimizerConfig& cfg, std::uint64_t seed,
                           int threads = 1);

struct SearchBudget {
  int candidates = 50;
  int hill_steps = 100;
  double step_scale = 0.05;
  int search_restarts = 16;  // reduced budget for estimates inside the search
  int final_restarts = 256;  // re-certification budget for the winner
};

struct SearchResult {
  UnitaryGate best_unitary;
  /// 1 - lambda^2 from the final high-budget certification.
  double best_guaranteed_entanglement = 0.0;
  /// The winner's estimate under the reduced search budget, for comparison
  /// with the final number.
  double search_stage_lambda = 1.0;
  /// (step, best guaranteed entanglement so far) at step 0 and after every
  /// accepted hill step; non-decreasing by construction.
  std::vector<std::pair<int, double>> trajectory;
  int accepted_steps = 0;
  CertificationReport final_report;
  SearchBudget budget;
  OptimizerConfig config;
  std::uint64_t seed = 0;
};

/// Best-of-N Haar candidates followed by hill climbing on the unitary
/// manifold. Proposals multiply the incumbent by a Cayley rotation built
/// from a random Hermitian direction of unit spectral norm scaled by
/// step_scale; a proposal is accepted iff its estimated overlap decreases.
/// Refuses dimensions for which no universal entangler exists.
SearchResult search_entangler(BipartiteDims dims, const OptimizerConfig& cfg,
                              const SearchBudget& budget, std::uint64_t seed,
                              int threads = 1);

}  // namespace entangler::search
