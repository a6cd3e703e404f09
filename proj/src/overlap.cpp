#include "entangler/overlap.hpp"

#include "entangler/parallel.hpp"

#include <cmath>
#include <vector>

namespace entangler::overlap {

namespace {

// Slack for runtime monotonicity checks and cross-restart tie-breaking.
constexpr double kValueSlack = 1e-12;

linalg::Vector fix_phase(linalg::Vector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > kValueSlack) {
      v *= std::conj(v[i]) / mag;
      break;
    }
  }
  return v;
}

ProductPair canonical(const ProductPair& p) {
  return ProductPair(fix_phase(p.left()), fix_phase(p.right()));
}

struct RestartOutcome {
  double value = 0.0;
  int sweeps = 0;
  bool converged = false;
  std::optional<ProductPair> input;
  std::optional<ProductPair> output;
};

std::pair<ProductPair, double> best_product_of_image(
    const linalg::Matrix& gate, const ProductPair& p, BipartiteDims dims) {
  const PureState image(gate * linalg::kron(p.left(), p.right()), dims);
  return states::nearest_product(image);
}

RestartOutcome run_restart(const linalg::Matrix& u, const linalg::Matrix& u_adj,
                           BipartiteDims dims, const OptimizerConfig& cfg,
                           std::uint64_t seed) {
  rng::Rng gen(seed);
  ProductPair cd(gen.unit_vector(dims.m), gen.unit_vector(dims.n));
  ProductPair ab = cd;

  RestartOutcome out;
  double previous = -1.0;
  double last_half = -1.0;
  for (int sweep = 0; sweep < cfg.max_iters; ++sweep) {
    auto [ab_next, fwd_value] = best_product_of_image(u, cd, dims);
    ab = std::move(ab_next);
    if (fwd_value < last_half - kValueSlack)
      throw std::logic_error("overlap sweep decreased the value");
    last_half = fwd_value;

    auto [cd_next, bwd_value] = best_product_of_image(u_adj, ab, dims);
    cd = std::move(cd_next);
    if (bwd_value < last_half - kValueSlack)
      throw std::logic_error("overlap sweep decreased the value");
    last_half = bwd_value;

    out.value = bwd_value;
    out.sweeps = sweep + 1;
    if (sweep > 0 && std::abs(out.value - previous) < cfg.conv_tol) {
      out.converged = true;
      break;
    }
    previous = out.value;
  }
  out.input = canonical(cd);
  out.output = canonical(ab);
  return out;
}

}  // namespace

UnitaryGate::UnitaryGate(linalg::Matrix matrix, BipartiteDims dims)
    : matrix_(std::move(matrix)), dims_(dims) {
  const auto k = static_cast<Eigen::Index>(dims.composite());
  if (matrix_.rows() != k || matrix_.cols() != k)
    throw std::invalid_argument(
        "UnitaryGate: matrix is " + std::to_string(matrix_.rows()) + "x" +
        std::to_string(matrix_.cols()) + ", expected " + std::to_string(k) +
        "x" + std::to_string(k));
  const double err = linalg::unitarity_error(matrix_);
  if (!(err < kUnitaryTol))
    throw std::invalid_argument(
        "UnitaryGate: matrix is not unitary, max |U^dagger U - I| = " +
        std::to_string(err));
}

UnitaryGate UnitaryGate::identity(BipartiteDims dims) {
  const auto k = static_cast<Eigen::Index>(dims.composite());
  return UnitaryGate(linalg::Matrix::Identity(k, k), dims);
}

double OverlapEstimate::recompute(const UnitaryGate& u) const {
  const linalg::Vector in =
      linalg::kron(input_witness.left(), input_witness.right());
  const linalg::Vector out =
      linalg::kron(output_witness.left(), output_witness.right());
  return std::abs(out.dot(u.matrix() * in));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kUniversalEntangler:
      return "UNIVERSAL_ENTANGLER_NUMERICAL";
    case Verdict::kNotUniversalWitness:
      return "NOT_UNIVERSAL_WITNESS_FOUND";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::pair<ProductPair, double> half_step_forward(const UnitaryGate& u,
                                                 const ProductPair& cd) {
  return best_product_of_image(u.matrix(), cd, u.dims());
}

std::pair<ProductPair, double> half_step_backward(const UnitaryGate& u,
                                                  const ProductPair& ab) {
  return best_product_of_image(u.matrix().adjoint(), ab, u.dims());
}

OverlapEstimate max_product_overlap(const UnitaryGate& u,
                                    const OptimizerConfig& cfg, int threads) {
  if (cfg.restarts < 1)
    throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  if (cfg.max_iters < 1)
    throw std::invalid_argument("OptimizerConfig: max_iters must be >= 1");
  if (!(cfg.conv_tol > 0.0))
    throw std::invalid_argument("OptimizerConfig: conv_tol must be > 0");

  const linalg::Matrix u_adj = u.matrix().adjoint();
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  parallel::parallel_for(cfg.restarts, threads, [&](int r) {
    outcomes[r] =
        run_restart(u.matrix(), u_adj, u.dims(), cfg,
                    rng::derive_seed(cfg.seed, rng::Stream::kRestart,
                                     static_cast<std::uint64_t>(r)));
  });

  // Deterministic reduction: strictly better (beyond slack) replaces, so
  // ties keep the lowest restart index regardless of scheduling.
  int best = 0;
  int converged_count = outcomes[0].converged ? 1 : 0;
  for (int r = 1; r < cfg.restarts; ++r) {
    if (outcomes[r].converged) ++converged_count;
    if (outcomes[r].value > outcomes[best].value + kValueSlack) best = r;
  }

  const RestartOutcome& kept = outcomes[best];
  return OverlapEstimate{kept.value,    *kept.input,    *kept.output,
                         kept.sweeps,   cfg.restarts,   kept.converged,
                         converged_count};
}

CertificationReport certify(const UnitaryGate& u, const OptimizerConfig& cfg,
                            int threads) {
  OverlapEstimate estimate = max_product_overlap(u, cfg, threads);

  const double lambda = estimate.lambda;
  Verdict verdict = Verdict::kInconclusive;
  if (lambda >= 1.0 - cfg.witness_tol) {
    verdict = Verdict::kNotUniversalWitness;
  } else if (lambda <= 1.0 - cfg.gap_tol &&
             estimate.converged_restarts >= cfg.required_converged()) {
    verdict = Verdict::kUniversalEntangler;
  }

  const auto& witness = estimate.input_witness;
  const PureState image(
      u.matrix() * linalg::kron(witness.left(), witness.right()), u.dims());
  const double entropy = states::entropy_entanglement(image);
  return CertificationReport{std::move(estimate), verdict,
                             1.0 - lambda * lambda, entropy, cfg};
}

}  // namespace entangler::overlap
