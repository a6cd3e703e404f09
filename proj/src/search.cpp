#include "entangler/search.hpp"

#include "entangler/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace entangler::search {

namespace {

constexpr double kTieSlack = 1e-12;
constexpr double kDriftTol = 1e-9;

/// Quantile with linear interpolation between order statistics.
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

/// Random Hermitian direction with unit spectral norm.
linalg::Matrix hermitian_direction(int k, rng::Rng& gen) {
  const linalg::Matrix g = gen.ginibre(k, k);
  linalg::Matrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<linalg::Matrix> eig(h,
                                                    Eigen::EigenvaluesOnly);
  const double scale = eig.eigenvalues().cwiseAbs().maxCoeff();
  if (scale > 0.0) h /= scale;
  return h;
}

/// Cayley rotation (I + i e H/2)^{-1} (I - i e H/2); exactly unitary for
/// Hermitian H up to roundoff (the two factors commute).
linalg::Matrix cayley_rotation(const linalg::Matrix& h, double epsilon) {
  const auto k = h.rows();
  const linalg::Matrix a = linalg::Complex(0.0, 0.5 * epsilon) * h;
  const linalg::Matrix num = linalg::Matrix::Identity(k, k) - a;
  const linalg::Matrix den = linalg::Matrix::Identity(k, k) + a;
  return den.partialPivLu().solve(num);
}

}  // namespace

linalg::Matrix haar_unitary(int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("haar_unitary: k must be >= 1");
  rng::Rng gen(seed);
  return linalg::qr_unitary(gen.ginibre(k, k));
}

HaarStudyResult haar_study(BipartiteDims dims, int samples,
                           const OptimizerConfig& cfg, std::uint64_t seed,
                           int threads) {
  if (samples < 1)
    throw std::invalid_argument("haar_study: samples must be >= 1");

  HaarStudyResult result;
  result.dims = dims;
  result.samples = samples;
  result.seed = seed;
  result.sub_seeds.resize(samples);
  result.lambda_values.resize(samples);
  result.verdicts.resize(samples, Verdict::kInconclusive);

  parallel::parallel_for(samples, threads, [&](int i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const std::uint64_t unitary_seed =
        rng::derive_seed(seed, rng::Stream::kStudyUnitary, idx);
    UnitaryGate gate(haar_unitary(dims.composite(), unitary_seed), dims);
    OptimizerConfig sample_cfg = cfg;
    sample_cfg.seed = rng::derive_seed(seed, rng::Stream::kStudyEstimate, idx);
    const CertificationReport report = overlap::certify(gate, sample_cfg);
    result.sub_seeds[i] = unitary_seed;
    result.lambda_values[i] = report.estimate.lambda;
    result.verdicts[i] = report.verdict;
  });

  int universal = 0;
  std::vector<double> entanglement(samples);
  for (int i = 0; i < samples; ++i) {
    if (result.lambda_values[i] <= 1.0 - cfg.gap_tol) ++universal;
    entanglement[i] =
        1.0 - result.lambda_values[i] * result.lambda_values[i];
  }
  result.fraction_universal =
      static_cast<double>(universal) / static_cast<double>(samples);
  std::sort(entanglement.begin(), entanglement.end());
  result.entanglement_quantiles = {quantile(entanglement, 0.0),
                                   quantile(entanglement, 0.25),
                                   quantile(entanglement, 0.5),
                                   quantile(entanglement, 0.75),
                                   quantile(entanglement, 1.0)};
  return result;
}

SearchResult search_entangler(BipartiteDims dims, const OptimizerConfig& cfg,
                              const SearchBudget& budget, std::uint64_t seed,
                              int threads) {
  const auto verdict = segre::exists_universal_entangler(dims);
  if (!verdict.exists)
    throw DimsNotEligible(
        "no universal entangler exists on " + std::to_string(dims.m) + "x" +
        std::to_string(dims.n) +
        " (requires min(m,n) >= 3 and (m,n) != (3,3))");
  if (budget.candidates < 1)
    throw std::invalid_argument("search: candidates must be >= 1");
  if (budget.hill_steps < 0 || !(budget.step_scale >= 0.0))
    throw std::invalid_argument("search: invalid hill-climb budget");

  const int k = dims.composite();
  OptimizerConfig est_cfg = cfg;
  est_cfg.restarts = budget.search_restarts;

  // Stage 1: best of N Haar candidates under the reduced estimate budget.
  std::vector<linalg::Matrix> candidates(budget.candidates);
  std::vector<double> lambdas(budget.candidates);
  parallel::parallel_for(budget.candidates, threads, [&](int i) {
    const auto idx = static_cast<std::uint64_t>(i);
    candidates[i] = haar_unitary(
        k, rng::derive_seed(seed, rng::Stream::kCandidateUnitary, idx));
    OptimizerConfig c = est_cfg;
    c.seed = rng::derive_seed(seed, rng::Stream::kCandidateEstimate, idx);
    lambdas[i] =
        overlap::max_product_overlap(UnitaryGate(candidates[i], dims), c)
            .lambda;
  });
  int best = 0;
  for (int i = 1; i < budget.candidates; ++i)
    if (lambdas[i] < lambdas[best] - kTieSlack) best = i;

  linalg::Matrix current = candidates[best];
  double current_lambda = lambdas[best];

  std::vector<std::pair<int, double>> trajectory;
  trajectory.emplace_back(0, 1.0 - current_lambda * current_lambda);
  int accepted = 0;

  // Stage 2: Cayley-rotation hill climbing, accept on strict improvement.
  for (int t = 0; t < budget.hill_steps; ++t) {
    const auto idx = static_cast<std::uint64_t>(t);
    rng::Rng gen(rng::derive_seed(seed, rng::Stream::kHillProposal, idx));
    const linalg::Matrix h = hermitian_direction(k, gen);
    const linalg::Matrix rotation = cayley_rotation(h, budget.step_scale);
    const linalg::Matrix proposal = linalg::qr_unitary(rotation * current);
    if (linalg::unitarity_error(proposal) >= kDriftTol)
      throw std::runtime_error("search: proposal drifted off the unitary group");

    OptimizerConfig c = est_cfg;
    c.seed = rng::derive_seed(seed, rng::Stream::kHillEstimate, idx);
    const double lambda =
        overlap::max_product_overlap(UnitaryGate(proposal, dims), c, threads)
            .lambda;
    if (lambda < current_lambda) {
      current = proposal;
      current_lambda = lambda;
      ++accepted;
      trajectory.emplace_back(t + 1, 1.0 - lambda * lambda);
    }
  }

  // Final high-budget re-certification of the winner.
  OptimizerConfig final_cfg = cfg;
  final_cfg.restarts = budget.final_restarts;
  final_cfg.seed = rng::derive_seed(seed, rng::Stream::kFinalEstimate, 0);
  UnitaryGate winner(current, dims);
  CertificationReport final_report = overlap::certify(winner, final_cfg, threads);
  const double guaranteed = final_report.min_geometric_entanglement;
  return SearchResult{std::move(winner),    guaranteed,
                      current_lambda,       std::move(trajectory),
                      accepted,             std::move(final_report),
                      budget,               cfg,
                      seed};
}

}  // namespace entangler::search
