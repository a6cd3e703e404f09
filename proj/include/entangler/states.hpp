#pragma once

#include "entangler/linalg.hpp"

#include <utility>

namespace entangler::states {

using linalg::Complex;
using linalg::Matrix;
using linalg::RealVector;
using linalg::Vector;

/// Allowed deviation of a state vector from unit norm.
inline constexpr double kNormTol = 1e-10;
/// Default threshold on Schmidt coefficients when counting rank.
inline constexpr double kRankTol = 1e-9;

/// Dimensions (m, n) of a bipartite system H_m (x) H_n.
struct BipartiteDims {
  int m = 1;
  int n = 1;

  int composite() const { return m * n; }
  /// Dimension of the product-state manifold in projective space.
  int segre_dim() const { return m + n - 2; }
  /// (m-2)(n-2); positive values of (criterion - 1) mean the product
  /// manifold is too small to be forced to intersect its image.
  int criterion() const { return (m - 2) * (n - 2); }

  bool operator==(const BipartiteDims&) const = default;
};

inline BipartiteDims make_dims(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be >= 1");
  return BipartiteDims{m, n};
}

/// Unit vector in the mn-dimensional composite space.
class PureState {
 public:
  PureState(Vector amplitudes, BipartiteDims dims);

  /// Rescales to unit norm before constructing; rejects the zero vector.
  static PureState normalized(Vector amplitudes, BipartiteDims dims);

  const Vector& amplitudes() const { return amps_; }
  BipartiteDims dims() const { return dims_; }

 private:
  Vector amps_;
  BipartiteDims dims_;
};

/// A pair of local unit vectors; a point of the product-state manifold.
class ProductPair {
 public:
  ProductPair(Vector left, Vector right);

  static ProductPair normalized(Vector left, Vector right);

  const Vector& left() const { return left_; }
  const Vector& right() const { return right_; }
  BipartiteDims dims() const {
    return BipartiteDims{static_cast<int>(left_.size()),
                         static_cast<int>(right_.size())};
  }

 private:
  Vector left_;
  Vector right_;
};

/// psi = sum_k coefficients[k] * kron(left_basis.col(k), right_basis.col(k))
struct SchmidtDecomposition {
  RealVector coefficients;  // descending, >= 0, sum of squares = 1
  Matrix left_basis;        // orthonormal columns, length m
  Matrix right_basis;       // orthonormal columns, length n

  Vector reconstruct() const;
};

/// Schmidt decomposition via SVD of the m x n matricization.
SchmidtDecomposition schmidt(const PureState& psi);

/// Number of Schmidt coefficients above tol. 1 means product state.
int schmidt_rank(const PureState& psi, double tol = kRankTol);

/// Entropy of entanglement in bits: -sum lambda_k^2 log2 lambda_k^2.
/// Zero on product states, log2 min(m,n) on maximally entangled ones.
double entropy_entanglement(const PureState& psi);

/// Geometric measure 1 - lambda_1^2. Zero exactly on product states.
double geometric_entanglement(const PureState& psi);

/// Best product approximation (the leading Schmidt pair) together with
/// its overlap lambda_1 = max over products |<a (x) b|psi>|.
std::pair<ProductPair, double> nearest_product(const PureState& psi);

}  // namespace entangler::states
