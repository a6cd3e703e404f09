#pragma once

// Brute-force grid maximization over the 2x2 product manifold, used as an
// independent oracle for nearest_product and max_product_overlap. No code
// from the optimizer is reused: states are swept directly and the inner
// 2x2 top singular value comes from the closed-form quadratic formula.

#include "entangler/overlap.hpp"
#include "entangler/states.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace grid_oracle {

// Each local unit vector is (cos t, e^{ip} sin t) up to a global phase that
// cannot affect any overlap magnitude. Both angles are stepped by pi/100:
// t in [0, pi/2] (51 points), p in [0, 2pi) (200 points).
struct FactorGrid {
  std::vector<std::complex<double>> first;   // cos t
  std::vector<std::complex<double>> second;  // e^{ip} sin t

  FactorGrid() {
    const double step = std::numbers::pi / 100.0;
    for (int ti = 0; ti <= 50; ++ti) {
      const double t = ti * step;
      const double ct = std::cos(t);
      const double st = std::sin(t);
      for (int pi_ = 0; pi_ < 200; ++pi_) {
        const double p = pi_ * step;
        first.push_back(ct);
        second.push_back(std::polar(st, p));
      }
    }
  }

  std::size_t size() const { return first.size(); }
};

inline const FactorGrid& factor_grid() {
  static const FactorGrid grid;
  return grid;
}

// Largest singular value of the 2x2 matrix [[m00, m01], [m10, m11]]:
// sigma_1^2 = (T + sqrt(T^2 - 4 |det|^2)) / 2 with T the squared
// Frobenius norm.
inline double top_singular_value_2x2(std::complex<double> m00,
                                     std::complex<double> m01,
                                     std::complex<double> m10,
                                     std::complex<double> m11) {
  const double t = std::norm(m00) + std::norm(m01) + std::norm(m10) +
                   std::norm(m11);
  const double det2 = std::norm(m00 * m11 - m01 * m10);
  const double disc = std::max(t * t - 4.0 * det2, 0.0);
  return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

// max over product pairs |<a (x) b|psi>| for a 2x2 state. The sweep runs
// over a only; for fixed a the best b is exact: |<a (x) b|psi>| = |<b|w>|
// with w_j = sum_i conj(a_i) psi_{ij}, maximized at b = w/||w||.
inline double max_overlap_state(const entangler::states::PureState& psi) {
  const auto& amps = psi.amplitudes();
  const auto& grid = factor_grid();
  double best = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto a0 = std::conj(grid.first[k]);
    const auto a1 = std::conj(grid.second[k]);
    const auto w0 = a0 * amps[0] + a1 * amps[2];
    const auto w1 = a0 * amps[1] + a1 * amps[3];
    best = std::max(best, std::sqrt(std::norm(w0) + std::norm(w1)));
  }
  return best;
}

// max over product inputs (c, d) of the top Schmidt coefficient of
// U(c (x) d) for a 2x2 gate, i.e. the grid estimate of the maximal
// product overlap. The inner max over output products is exact (it is the
// top singular value of the 2x2 matricization), so only (c, d) is swept.
inline double max_overlap_unitary(const entangler::overlap::UnitaryGate& u) {
  const auto& m = u.matrix();
  const auto& grid = factor_grid();
  const std::size_t g = grid.size();

  double best = 0.0;
  std::complex<double> mc[4][2];
  for (std::size_t ci = 0; ci < g; ++ci) {
    const auto c0 = grid.first[ci];
    const auto c1 = grid.second[ci];
    // U(c (x) d) = (c0 U[:, 0:2] + c1 U[:, 2:4]) d
    for (int r = 0; r < 4; ++r) {
      mc[r][0] = c0 * m(r, 0) + c1 * m(r, 2);
      mc[r][1] = c0 * m(r, 1) + c1 * m(r, 3);
    }
    for (std::size_t di = 0; di < g; ++di) {
      const auto d0 = grid.first[di];
      const auto d1 = grid.second[di];
      const auto o0 = mc[0][0] * d0 + mc[0][1] * d1;
      const auto o1 = mc[1][0] * d0 + mc[1][1] * d1;
      const auto o2 = mc[2][0] * d0 + mc[2][1] * d1;
      const auto o3 = mc[3][0] * d0 + mc[3][1] * d1;
      best = std::max(best, top_singular_value_2x2(o0, o1, o2, o3));
    }
  }
  return best;
}

}  // namespace grid_oracle
