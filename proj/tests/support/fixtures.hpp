#pragma once

// Shared fixed states and gates for the test suite. Expected values quoted
// in the tests were computed independently (closed forms where available,
// otherwise a reference SVD outside this code base).

#include "entangler/linalg.hpp"
#include "entangler/overlap.hpp"
#include "entangler/states.hpp"

#include <cmath>
#include <numbers>

namespace fixtures {

using entangler::linalg::Complex;
using entangler::linalg::Matrix;
using entangler::linalg::Vector;

inline Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v[i++] = e;
  return v;
}

// Kronecker product of matrices, block convention matching linalg::kron:
// (A (x) B)(i*p + k, j*q + l) = A(i,j) B(k,l).
inline Matrix kron_matrix(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// (|00> + |11>)/sqrt(2)
inline entangler::states::PureState bell_state() {
  return entangler::states::PureState::normalized(vec({1, 0, 0, 1}), {2, 2});
}

// (|00> + |11> + |22>)/sqrt(3) in 3x3
inline entangler::states::PureState ghz3_state() {
  return entangler::states::PureState::normalized(
      vec({1, 0, 0, 0, 1, 0, 0, 0, 1}), {3, 3});
}

// Fixed 2x2 state [1, 2i, 3, -1+i]/4 whose Schmidt coefficients have the
// closed form sqrt(8 +- sqrt(38))/4.
inline entangler::states::PureState psi22() {
  return entangler::states::PureState::normalized(
      vec({1.0, Complex(0, 2), 3.0, Complex(-1, 1)}), {2, 2});
}
inline double psi22_lambda1() { return std::sqrt(8.0 + std::sqrt(38.0)) / 4.0; }
inline double psi22_lambda2() { return std::sqrt(8.0 - std::sqrt(38.0)) / 4.0; }

// Fixed entangled 3x3 state; lambda_2 = 0.46625240412015695 (reference SVD).
inline entangler::states::PureState psi33() {
  return entangler::states::PureState::normalized(
      vec({2.0, Complex(1, 1), 0.0, -1.0, Complex(0, 3), 1.0, 0.0, 1.0,
           Complex(-2, 1)}),
      {3, 3});
}

inline entangler::overlap::UnitaryGate cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return entangler::overlap::UnitaryGate(m, {2, 2});
}

// SWAP on k x k: (i, j) -> (j, i) in the composite index i*k + j.
inline entangler::overlap::UnitaryGate swap_gate(int k) {
  Matrix m = Matrix::Zero(k * k, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i * k + j, j * k + i) = 1.0;
  return entangler::overlap::UnitaryGate(m, {k, k});
}

// exp(i pi/8 X(x)X) conjugated by fixed real rotations: an exactly
// reproducible entangling 2x2 gate that is not aligned with the sweep grid.
inline entangler::overlap::UnitaryGate rotated_xx() {
  const double a = std::numbers::pi / 8.0;
  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = xx(1, 2) = xx(2, 1) = xx(3, 0) = 1.0;
  const Matrix uxx = std::cos(a) * Matrix::Identity(4, 4) +
                     Complex(0, 1) * std::sin(a) * xx;
  auto rot = [](double t) {
    Matrix r(2, 2);
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
  };
  const Matrix u =
      kron_matrix(rot(0.3), rot(0.7)) * uxx * kron_matrix(rot(1.1), rot(0.2));
  return entangler::overlap::UnitaryGate(u, {2, 2});
}

}  // namespace fixtures
