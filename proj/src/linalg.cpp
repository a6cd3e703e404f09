#include "entangler/linalg.hpp"

#include <Eigen/SVD>

namespace entangler::linalg {

Vector kron(const Vector& a, const Vector& b) {
  const Eigen::Index m = a.size();
  const Eigen::Index n = b.size();
  Vector out(m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[i * n + j] = a[i] * b[j];
  return out;
}

Matrix reshape(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("reshape: vector length " +
                                std::to_string(v.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = v[i * cols + j];
  return out;
}

Vector flatten(const Matrix& m) {
  Vector out(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
  return out;
}

Matrix SvdResult::reconstruct() const {
  return left * singular_values.asDiagonal() * right.adjoint();
}

SvdResult svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw std::runtime_error("svd: Jacobi iteration did not converge");
  return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Matrix qr_unitary(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("qr_unitary: matrix must be square");
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();

  double diag_max = 0.0;
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    diag_max = std::max(diag_max, std::abs(r(j, j)));
  if (diag_max == 0.0) throw RankDeficientError("qr_unitary: zero matrix");

  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    const double mag = std::abs(r(j, j));
    if (mag <= kRankTol * diag_max)
      throw RankDeficientError("qr_unitary: rank deficient, |R(" +
                               std::to_string(j) + "," + std::to_string(j) +
                               ")| = " + std::to_string(mag));
    q.col(j) *= r(j, j) / mag;
  }
  return q;
}

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

double unitarity_error(const Matrix& u) {
  Matrix g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return max_abs(g);
}

}  // namespace entangler::linalg
