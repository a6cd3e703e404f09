#include "entangler/rng.hpp"
#include "entangler/search.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace entangler;
using overlap::OptimizerConfig;
using overlap::UnitaryGate;
using search::SearchBudget;
using states::BipartiteDims;

TEST_CASE("haar samples are unitary for every size") {
  for (int k : {1, 2, 5, 12}) {
    const auto u = search::haar_unitary(k, 1000 + k);
    CHECK(u.rows() == k);
    CHECK(linalg::unitarity_error(u) < 1e-10);
  }
  // k = 1 degenerates to a unit-modulus scalar.
  CHECK(std::abs(std::abs(search::haar_unitary(1, 3)(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("haar samples are reproducible and seed-dependent") {
  const auto a = search::haar_unitary(6, 42);
  const auto b = search::haar_unitary(6, 42);
  const auto c = search::haar_unitary(6, 43);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a - c).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar first moment E|U_ij|^2 = 1/k") {
  // Monte Carlo check of the defining moment at several sizes; the sample
  // mean of |U_ij|^2 for a fixed entry must land within three standard
  // errors of 1/k.
  struct Probe {
    int k;
    int samples;
    int row, col;
  };
  for (const Probe p : {Probe{4, 10000, 0, 0}, Probe{9, 4000, 5, 2},
                        Probe{12, 3000, 11, 7}}) {
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < p.samples; ++s) {
      const auto u =
          search::haar_unitary(p.k, rng::derive_seed(2000 + p.k, 1, s));
      const double x = std::norm(u(p.row, p.col));
      sum += x;
      sum_sq += x * x;
    }
    const double mean = sum / p.samples;
    const double var = (sum_sq - sum * sum / p.samples) / (p.samples - 1);
    const double stderr3 = 3.0 * std::sqrt(var / p.samples);
    CHECK(std::abs(mean - 1.0 / p.k) < stderr3);
  }
}

TEST_CASE("study refuses and search refuses ineligible dimensions") {
  OptimizerConfig cfg;
  cfg.seed = 1;
  CHECK_THROWS_AS(
      search::search_entangler({2, 6}, cfg, SearchBudget{}, 1),
      search::DimsNotEligible);
  CHECK_THROWS_AS(
      search::search_entangler({3, 3}, cfg, SearchBudget{}, 1),
      search::DimsNotEligible);
}

TEST_CASE("haar study on degenerate dims finds no universal entangler") {
  OptimizerConfig cfg;
  cfg.restarts = 64;
  const auto res = search::haar_study({2, 2}, 50, cfg, 500);

  CHECK(res.samples == 50);
  CHECK(res.lambda_values.size() == 50);
  CHECK(res.fraction_universal == 0.0);
  for (double l : res.lambda_values) CHECK(l >= 1.0 - 1e-6);
  // All guaranteed-entanglement quantiles collapse to ~0.
  CHECK(res.entanglement_quantiles[4] < 1e-5);
}

TEST_CASE("haar study at 3x4 sees mostly universal entanglers") {
  OptimizerConfig cfg;
  cfg.restarts = 128;
  cfg.gap_tol = 1e-6;  // matched to the observed overlap scale at 3x4
  const auto res = search::haar_study({3, 4}, 20, cfg, 501);

  CHECK(res.fraction_universal >= 0.9);
  CHECK(res.sub_seeds.size() == 20);
  // Quantiles of 1 - lambda^2 are sorted min..max.
  for (int q = 0; q + 1 < 5; ++q)
    CHECK(res.entanglement_quantiles[q] <= res.entanglement_quantiles[q + 1]);
}

TEST_CASE("haar study is reproducible and worker-count independent") {
  OptimizerConfig cfg;
  cfg.restarts = 32;
  const auto a = search::haar_study({3, 4}, 8, cfg, 502);
  const auto b = search::haar_study({3, 4}, 8, cfg, 502);
  const auto c = search::haar_study({3, 4}, 8, cfg, 502, /*threads=*/4);

  CHECK(a.lambda_values == b.lambda_values);
  CHECK(a.lambda_values == c.lambda_values);
  CHECK(a.sub_seeds == c.sub_seeds);
  CHECK(a.fraction_universal == c.fraction_universal);
}

TEST_CASE("a degenerate budget reduces to a single certified candidate") {
  OptimizerConfig cfg;
  cfg.gap_tol = 1e-6;
  SearchBudget budget;
  budget.candidates = 1;
  budget.hill_steps = 0;
  budget.search_restarts = 16;
  budget.final_restarts = 64;

  const auto res = search::search_entangler({3, 4}, cfg, budget, 600);
  CHECK(res.accepted_steps == 0);
  CHECK(res.trajectory.size() == 1);
  CHECK(res.trajectory[0].first == 0);
  CHECK(res.best_guaranteed_entanglement > 0.0);
  CHECK(res.best_guaranteed_entanglement ==
        doctest::Approx(1.0 - res.final_report.estimate.lambda *
                                  res.final_report.estimate.lambda)
            .epsilon(1e-12));
  CHECK(linalg::unitarity_error(res.best_unitary.matrix()) < 1e-10);
}

TEST_CASE("search trajectory is monotone and the result reproducible") {
  OptimizerConfig cfg;
  cfg.gap_tol = 1e-6;
  SearchBudget budget;
  budget.candidates = 8;
  budget.hill_steps = 20;
  budget.search_restarts = 8;
  budget.final_restarts = 32;

  const auto res = search::search_entangler({3, 4}, cfg, budget, 601);
  for (std::size_t i = 0; i + 1 < res.trajectory.size(); ++i) {
    CHECK(res.trajectory[i].second <= res.trajectory[i + 1].second);
    CHECK(res.trajectory[i].first < res.trajectory[i + 1].first);
  }
  CHECK(res.accepted_steps ==
        static_cast<int>(res.trajectory.size()) - 1);
  CHECK(res.best_guaranteed_entanglement > 0.0);

  const auto again = search::search_entangler({3, 4}, cfg, budget, 601, 4);
  CHECK(res.best_guaranteed_entanglement == again.best_guaranteed_entanglement);
  CHECK((res.best_unitary.matrix() - again.best_unitary.matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("regression: search at 3x4 with the default budget") {
  // Frozen output of this implementation for the documented default budget
  // (50 candidates, 100 hill steps, step scale 0.05).
  OptimizerConfig cfg;
  SearchBudget budget;
  const auto res = search::search_entangler({3, 4}, cfg, budget, 2024);
  CHECK(res.best_guaranteed_entanglement ==
        doctest::Approx(9.9120050858214626e-05).epsilon(1e-9));
  CHECK(res.final_report.estimate.lambda ==
        doctest::Approx(0.99995043874641198).epsilon(1e-10));
  CHECK(res.search_stage_lambda <= 1.0);
}
