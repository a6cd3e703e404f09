#include "entangler/segre.hpp"

namespace entangler::segre {

ExistenceVerdict exists_universal_entangler(states::BipartiteDims dims) {
  if (dims.m < 1 || dims.n < 1)
    throw std::invalid_argument("dimensions must be >= 1");
  ExistenceVerdict v;
  v.dims = dims;
  v.segre_dim = dims.segre_dim();
  v.ambient_dim = dims.m * dims.n - 1;
  v.intersection_excess = 2 * v.segre_dim - v.ambient_dim;
  v.exists = std::min(dims.m, dims.n) >= 3 && !(dims.m == 3 && dims.n == 3);
  return v;
}

states::PureState segre_embed(const states::ProductPair& p) {
  return states::PureState::normalized(linalg::kron(p.left(), p.right()),
                                       p.dims());
}

double max_minor_violation(const states::PureState& psi) {
  const auto dims = psi.dims();
  const linalg::Matrix m = linalg::reshape(psi.amplitudes(), dims.m, dims.n);
  double worst = 0.0;
  for (Eigen::Index i = 0; i + 1 < m.rows(); ++i)
    for (Eigen::Index k = i + 1; k < m.rows(); ++k)
      for (Eigen::Index j = 0; j + 1 < m.cols(); ++j)
        for (Eigen::Index l = j + 1; l < m.cols(); ++l)
          worst = std::max(worst,
                           std::abs(m(i, j) * m(k, l) - m(i, l) * m(k, j)));
  return worst;
}

bool is_product(const states::PureState& psi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_product: tol must be > 0");
  return max_minor_violation(psi) <= tol;
}

}  // namespace entangler::segre
