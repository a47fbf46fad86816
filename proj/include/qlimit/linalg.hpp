#pragma once

// Dense complex linear algebra shared by all modules.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qlimit/phase.hpp"

namespace qlimit {

template <typename Real>
using BasicMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using BasicSparse = Eigen::SparseMatrix<std::complex<Real>>;

using Matrix = BasicMatrix<double>;
using Vector = Eigen::VectorXcd;
/// Amplitudes over the position basis: length N for a single model, N² for a
/// pair (A-major, see automaton.hpp).
using BasisVector = Vector;

namespace detail {

inline void check_square_pair(Eigen::Index ar, Eigen::Index ac, Eigen::Index br, Eigen::Index bc) {
  if (ar != ac || br != bc || ar != br) {
    throw std::invalid_argument("commutator: shape mismatch (" + std::to_string(ar) + "x" + std::to_string(ac) +
                                " vs " + std::to_string(br) + "x" + std::to_string(bc) + ")");
  }
}

}  // namespace detail

/// AB − BA.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> commutator(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  detail::check_square_pair(a.rows(), a.cols(), b.rows(), b.cols());
  return a * b - b * a;
}

template <typename Scalar>
Eigen::SparseMatrix<Scalar> commutator(const Eigen::SparseMatrix<Scalar>& a, const Eigen::SparseMatrix<Scalar>& b) {
  detail::check_square_pair(a.rows(), a.cols(), b.rows(), b.cols());
  return Eigen::SparseMatrix<Scalar>(a * b) - Eigen::SparseMatrix<Scalar>(b * a);
}

/// max_ij |m_ij|; zero for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return static_cast<double>(m.cwiseAbs().maxCoeff());
}

/// max |m_ij| restricted to rows [0, row_count). Used to skip the truncation
/// boundary of infinite-dimensional representations.
template <typename Derived>
double max_abs_rows(const Eigen::MatrixBase<Derived>& m, Eigen::Index row_count) {
  row_count = std::clamp<Eigen::Index>(row_count, 0, m.rows());
  if (row_count == 0 || m.cols() == 0) return 0.0;
  return static_cast<double>(m.topRows(row_count).cwiseAbs().maxCoeff());
}

/// ‖U†U − I‖_max.
inline double unitarity_residual(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

/// Kronecker product, A-major: (a ⊗ b)(i·nb + k, j·nb + l) = a(i,j)·b(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Dense power by repeated squaring.
inline Matrix matrix_power(const Matrix& m, unsigned long long exponent) {
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1ULL) result = result * base;
    exponent >>= 1ULL;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace qlimit
