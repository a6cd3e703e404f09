#pragma once

#include "entangler/rng.hpp"
#include "entangler/states.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace entangler::overlap {

using states::BipartiteDims;
using states::ProductPair;
using states::PureState;

/// Maximum allowed ‖U†U − I‖_max for a gate.
inline constexpr double kUnitaryTol = 1e-10;

/// An mn x mn unitary acting on the composite space, verified at
/// construction.
class UnitaryGate {
 public:
  UnitaryGate(linalg::Matrix matrix, BipartiteDims dims);

  const linalg::Matrix& matrix() const { return matrix_; }
  BipartiteDims dims() const { return dims_; }
  UnitaryGate adjoint() const { return UnitaryGate(matrix_.adjoint(), dims_); }

  static UnitaryGate identity(BipartiteDims dims);

 private:
  linalg::Matrix matrix_;
  BipartiteDims dims_;
};

struct OptimizerConfig {
  int restarts = 64;
  int max_iters = 10000;    // full forward/backward sweeps per restart
  double conv_tol = 1e-12;  // stop when a sweep improves the value by less
  double witness_tol = 1e-6;  // lambda >= 1 - witness_tol counts as a witness
  double gap_tol = 1e-4;      // lambda <= 1 - gap_tol certifies numerically
  std::uint64_t seed = 0;
  /// Converged restarts required before the verdict may claim a universal
  /// entangler; unset means every restart must have converged.
  std::optional<int> min_converged_restarts;

  int required_converged() const {
    return min_converged_restarts.value_or(restarts);
  }
};

/// Outcome of the multistart maximization of |<a(x)b|U|c(x)d>|.
struct OverlapEstimate {
  double lambda = 0.0;        // estimated maximal product overlap
  ProductPair input_witness;  // the maximizing (c, d)
  ProductPair output_witness;  // the (a, b) nearest to U(c(x)d)
  int iterations = 0;          // sweeps used by the kept restart
  int restarts_used = 0;
  bool converged = false;  // kept restart stopped before max_iters
  int converged_restarts = 0;

  /// |<a(x)b| U |c(x)d>| recomputed from the stored witnesses.
  double recompute(const UnitaryGate& u) const;
};

enum class Verdict {
  kUniversalEntangler,   // lambda <= 1 - gap_tol: no product output found
  kNotUniversalWitness,  // lambda >= 1 - witness_tol: product->product pair
  kInconclusive,         // dead band, or too few converged restarts
};

std::string to_string(Verdict v);

struct CertificationReport {
  OverlapEstimate estimate;
  Verdict verdict = Verdict::kInconclusive;
  /// 1 - lambda^2: every product input is guaranteed at least this much
  /// geometric entanglement at the output, per the estimate.
  double min_geometric_entanglement = 0.0;
  /// Entropy (bits) of U applied to the input witness; an upper bound on
  /// the minimum output entropy over product inputs.
  double entropy_at_witness = 0.0;
  OptimizerConfig config;
};

/// For fixed input pair, the exact best output approximation: the leading
/// Schmidt pair of U(c (x) d) and its coefficient, which equals
/// max over unit (a,b) of |<a(x)b|U|c(x)d>|.
std::pair<ProductPair, double> half_step_forward(const UnitaryGate& u,
                                                 const ProductPair& cd);

/// Mirror step through the adjoint: best input pair for a fixed output.
std::pair<ProductPair, double> half_step_backward(const UnitaryGate& u,
                                                  const ProductPair& ab);

/// Multistart alternating maximization of the product overlap. Within each
/// restart the value sequence is non-decreasing (each half-step solves its
/// subproblem exactly); this is checked at run time. Restarts are
/// independent; ties across restarts (within 1e-12) keep the lowest index,
/// so results do not depend on the worker count.
OverlapEstimate max_product_overlap(const UnitaryGate& u,
                                    const OptimizerConfig& cfg,
                                    int threads = 1);

/// Runs the estimator and classifies the gate. lambda >= 1 - witness_tol
/// reports the product->product witness; lambda <= 1 - gap_tol (with enough
/// converged restarts) certifies the gate numerically; anything in the dead
/// band between the two is inconclusive.
CertificationReport certify(const UnitaryGate& u, const OptimizerConfig& cfg,
                            int threads = 1);

}  // namespace entangler::overlap
