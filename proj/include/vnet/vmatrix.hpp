#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vnet/algebra.hpp"

namespace vnet {

/// A matrix over an algebra: an M x N grid of elements, each a coordinate
/// vector of length n. Storage is one contiguous array in row-scan order
/// with coordinates innermost: coord (i, j, k) lives at (i*N + j)*n + k.
/// phi_matrix / unphi_matrix below are pure reshuffles of this layout.
template <typename Scalar = double>
class VMatrix {
 public:
  VMatrix(Algebra<Scalar> algebra, Eigen::Index rows, Eigen::Index cols)
      : algebra_(std::move(algebra)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows * cols * algebra_.dim()), Scalar(0)) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("VMatrix: rows and cols must be positive");
  }

  const Algebra<Scalar>& algebra() const { return algebra_; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index dim() const { return algebra_.dim(); }

  /// View of entry (i, j) as a coordinate vector.
  Eigen::Map<const VectorX<Scalar>> operator()(Eigen::Index i, Eigen::Index j) const {
    return {data_.data() + offset(i, j), dim()};
  }
  Eigen::Map<VectorX<Scalar>> operator()(Eigen::Index i, Eigen::Index j) {
    return {data_.data() + offset(i, j), dim()};
  }

  Scalar coord(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[static_cast<std::size_t>(offset(i, j) + k)];
  }
  Scalar& coord(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[static_cast<std::size_t>(offset(i, j) + k)];
  }

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  friend bool operator==(const VMatrix& a, const VMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.algebra_ == b.algebra_ &&
           a.data_ == b.data_;
  }

 private:
  Eigen::Index offset(Eigen::Index i, Eigen::Index j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return (i * cols_ + j) * dim();
  }

  Algebra<Scalar> algebra_;
  Eigen::Index rows_, cols_;
  std::vector<Scalar> data_;
};

using VMatrixD = VMatrix<double>;

namespace detail {

template <typename Scalar>
void require_same_algebra(const VMatrix<Scalar>& a, const VMatrix<Scalar>& b, const char* op) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument(std::string(op) + ": operands use different algebras");
}

}  // namespace detail

template <typename Scalar>
VMatrix<Scalar> operator+(const VMatrix<Scalar>& a, const VMatrix<Scalar>& b) {
  detail::require_same_algebra(a, b, "operator+");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("operator+: shape mismatch");
  VMatrix<Scalar> out = a;
  for (std::size_t t = 0; t < out.data().size(); ++t) out.data()[t] += b.data()[t];
  return out;
}

template <typename Scalar>
VMatrix<Scalar> operator-(const VMatrix<Scalar>& a, const VMatrix<Scalar>& b) {
  detail::require_same_algebra(a, b, "operator-");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("operator-: shape mismatch");
  VMatrix<Scalar> out = a;
  for (std::size_t t = 0; t < out.data().size(); ++t) out.data()[t] -= b.data()[t];
  return out;
}

template <typename Scalar>
VMatrix<Scalar> operator*(Scalar s, const VMatrix<Scalar>& a) {
  VMatrix<Scalar> out = a;
  for (Scalar& v : out.data()) v *= s;
  return out;
}

/// Splits A into its n real component matrices: A = sum_k components[k] e_k.
template <typename Scalar>
std::vector<MatrixX<Scalar>> component_stack(const VMatrix<Scalar>& A) {
  const Eigen::Index n = A.dim();
  std::vector<MatrixX<Scalar>> comps(static_cast<std::size_t>(n),
                                     MatrixX<Scalar>(A.rows(), A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      for (Eigen::Index k = 0; k < n; ++k) comps[static_cast<std::size_t>(k)](i, j) = A.coord(i, j, k);
  return comps;
}

/// Reassembles a VMatrix from its component stack (inverse of component_stack).
template <typename Scalar>
VMatrix<Scalar> vmatrix_from_components(const Algebra<Scalar>& algebra,
                                        const std::vector<MatrixX<Scalar>>& components) {
  const Eigen::Index n = algebra.dim();
  if (static_cast<Eigen::Index>(components.size()) != n)
    throw std::invalid_argument("vmatrix_from_components: need one component per basis element");
  const Eigen::Index rows = components[0].rows();
  const Eigen::Index cols = components[0].cols();
  VMatrix<Scalar> out(algebra, rows, cols);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& c = components[static_cast<std::size_t>(k)];
    if (c.rows() != rows || c.cols() != cols)
      throw std::invalid_argument("vmatrix_from_components: components have unequal shapes");
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) out.coord(i, j, k) = c(i, j);
  }
  return out;
}

/// Real representation of B in V^{L x N}: an nL x N matrix that stacks the
/// coordinates of each column entrywise, phi(B)(l*n + s, j) = B(l,j)_s.
template <typename Scalar>
MatrixX<Scalar> phi_matrix(const VMatrix<Scalar>& B) {
  const Eigen::Index n = B.dim();
  MatrixX<Scalar> out(n * B.rows(), B.cols());
  for (Eigen::Index l = 0; l < B.rows(); ++l)
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      for (Eigen::Index s = 0; s < n; ++s) out(l * n + s, j) = B.coord(l, j, s);
  return out;
}

/// Inverse of phi_matrix: regroups consecutive blocks of n rows into entries.
template <typename Scalar>
VMatrix<Scalar> unphi_matrix(const Algebra<Scalar>& algebra, const MatrixX<Scalar>& Y) {
  const Eigen::Index n = algebra.dim();
  if (Y.rows() % n != 0)
    throw std::invalid_argument("unphi_matrix: row count is not divisible by the dimension");
  VMatrix<Scalar> out(algebra, Y.rows() / n, Y.cols());
  for (Eigen::Index l = 0; l < out.rows(); ++l)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      for (Eigen::Index s = 0; s < n; ++s) out.coord(l, j, s) = Y(l * n + s, j);
  return out;
}

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>);
  MatrixX<typename DA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

/// Real matrix emulating left multiplication by A on phi images:
/// M_L(A) = sum_k A_k (x) P_k, built from the component stack.
template <typename Scalar>
MatrixX<Scalar> big_left_matrix(const VMatrix<Scalar>& A) {
  const Eigen::Index n = A.dim();
  const auto comps = component_stack(A);
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n * A.rows(), n * A.cols());
  for (Eigen::Index k = 0; k < n; ++k)
    out += kron(comps[static_cast<std::size_t>(k)], A.algebra().left_basis_matrix(k));
  return out;
}

/// Same matrix assembled block by block: block (i,l) is M_L of entry (i,l).
/// Kept as an independent construction for cross-checking big_left_matrix.
template <typename Scalar>
MatrixX<Scalar> big_left_matrix_blockwise(const VMatrix<Scalar>& A) {
  const Eigen::Index n = A.dim();
  MatrixX<Scalar> out(n * A.rows(), n * A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index l = 0; l < A.cols(); ++l)
      out.block(i * n, l * n, n, n) = left_mult_matrix(A.algebra(), A(i, l));
  return out;
}

/// Entrywise product definition c_ij = sum_l a_il * b_lj; brute-force loops.
template <typename Scalar>
VMatrix<Scalar> vmat_mul_direct(const VMatrix<Scalar>& A, const VMatrix<Scalar>& B) {
  detail::require_same_algebra(A, B, "vmat_mul_direct");
  if (A.cols() != B.rows()) throw std::invalid_argument("vmat_mul_direct: inner dimension mismatch");
  VMatrix<Scalar> C(A.algebra(), A.rows(), B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      VectorX<Scalar> acc = VectorX<Scalar>::Zero(A.dim());
      for (Eigen::Index l = 0; l < A.cols(); ++l)
        acc += multiply(A.algebra(), A(i, l), B(l, j));
      C(i, j) = acc;
    }
  return C;
}

/// The same product computed with real matrix arithmetic:
/// C = unphi( M_L(A) * phi(B) ).
template <typename Scalar>
VMatrix<Scalar> vmat_mul_emulated(const VMatrix<Scalar>& A, const VMatrix<Scalar>& B) {
  detail::require_same_algebra(A, B, "vmat_mul_emulated");
  if (A.cols() != B.rows())
    throw std::invalid_argument("vmat_mul_emulated: inner dimension mismatch");
  const MatrixX<Scalar> product = big_left_matrix(A) * phi_matrix(B);
  return unphi_matrix(A.algebra(), product);
}

}  // namespace vnet
