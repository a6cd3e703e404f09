#include "entangler/states.hpp"

#include <cmath>

namespace entangler::states {

namespace {

void check_unit_norm(const Vector& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > kNormTol)
    throw std::invalid_argument(std::string(what) + ": vector is not unit norm (|v| = " +
                                std::to_string(v.norm()) + ")");
}

Vector normalize_or_throw(Vector v, const char* what) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw std::invalid_argument(std::string(what) + ": cannot normalize zero or non-finite vector");
  return v / norm;
}

}  // namespace

PureState::PureState(Vector amplitudes, BipartiteDims dims)
    : amps_(std::move(amplitudes)), dims_(dims) {
  if (amps_.size() != dims_.composite())
    throw std::invalid_argument("PureState: amplitude count " +
                                std::to_string(amps_.size()) + " != m*n = " +
                                std::to_string(dims_.composite()));
  check_unit_norm(amps_, "PureState");
}

PureState PureState::normalized(Vector amplitudes, BipartiteDims dims) {
  return PureState(normalize_or_throw(std::move(amplitudes), "PureState"), dims);
}

ProductPair::ProductPair(Vector left, Vector right)
    : left_(std::move(left)), right_(std::move(right)) {
  check_unit_norm(left_, "ProductPair.left");
  check_unit_norm(right_, "ProductPair.right");
}

ProductPair ProductPair::normalized(Vector left, Vector right) {
  return ProductPair(normalize_or_throw(std::move(left), "ProductPair.left"),
                     normalize_or_throw(std::move(right), "ProductPair.right"));
}

Vector SchmidtDecomposition::reconstruct() const {
  Vector out = Vector::Zero(left_basis.rows() * right_basis.rows());
  for (Eigen::Index k = 0; k < coefficients.size(); ++k)
    out += coefficients[k] *
           linalg::kron(left_basis.col(k), right_basis.col(k));
  return out;
}

SchmidtDecomposition schmidt(const PureState& psi) {
  const auto dims = psi.dims();
  const linalg::SvdResult dec =
      linalg::svd(linalg::reshape(psi.amplitudes(), dims.m, dims.n));
  // With M(i,j) = <ij|psi>, M = U S V^dagger gives
  // psi = sum_k s_k U(:,k) (x) conj(V(:,k)); fold the conjugation in so
  // reconstruct() is a plain sum of Kronecker products.
  return SchmidtDecomposition{dec.singular_values, dec.left,
                              dec.right.conjugate()};
}

int schmidt_rank(const PureState& psi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("schmidt_rank: tol must be > 0");
  const auto dec = schmidt(psi);
  int rank = 0;
  for (Eigen::Index k = 0; k < dec.coefficients.size(); ++k)
    if (dec.coefficients[k] > tol) ++rank;
  return rank;
}

double entropy_entanglement(const PureState& psi) {
  const auto dec = schmidt(psi);
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < dec.coefficients.size(); ++k) {
    const double p = dec.coefficients[k] * dec.coefficients[k];
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

double geometric_entanglement(const PureState& psi) {
  const auto dec = schmidt(psi);
  const double top = dec.coefficients.size() > 0 ? dec.coefficients[0] : 0.0;
  return 1.0 - top * top;
}

std::pair<ProductPair, double> nearest_product(const PureState& psi) {
  const auto dec = schmidt(psi);
  return {ProductPair(dec.left_basis.col(0), dec.right_basis.col(0)),
          dec.coefficients[0]};
}

}  // namespace entangler::states
