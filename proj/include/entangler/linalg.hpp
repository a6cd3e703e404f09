#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace entangler::linalg {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Orthonormality / reconstruction tolerance shared by all factorizations.
inline constexpr double kOrthoTol = 1e-10;
/// Relative rank-deficiency threshold for QR.
inline constexpr double kRankTol = 1e-12;

/// Thrown by qr_unitary when a diagonal entry of R falls below kRankTol
/// relative to the largest one.
class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kronecker product of two vectors. Entry i*n + j equals a[i]*b[j],
/// first factor major. This index convention is the single source of
/// truth for all composite-system indexing in the library.
Vector kron(const Vector& a, const Vector& b);

/// Row-major matricization: entry (i,j) = v[i*cols + j].
/// Inverse of flatten; reshape(kron(a,b), m, n) is the outer product a*b^T.
Matrix reshape(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Row-major vectorization, inverse of reshape.
Vector flatten(const Matrix& m);

struct SvdResult {
  Matrix left;                 // columns are left singular vectors
  RealVector singular_values;  // descending, >= 0
  Matrix right;                // columns are right singular vectors

  /// Rebuilds left * diag(singular_values) * right^dagger.
  Matrix reconstruct() const;
};

/// Full SVD with singular values in descending order.
/// M = left * diag(s) * right^dagger within kOrthoTol (Frobenius).
SvdResult svd(const Matrix& m);

/// Unitary factor Q of the unique QR factorization whose R has a real
/// positive diagonal. For full-rank square M this Q is canonical and does
/// not depend on the underlying QR algorithm.
Matrix qr_unitary(const Matrix& m);

/// max_ij |A(i,j)|
double max_abs(const Matrix& a);

/// ‖U^dagger U − I‖_max
double unitarity_error(const Matrix& u);

}  // namespace entangler::linalg
