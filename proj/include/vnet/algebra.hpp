#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnet {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A finite-dimensional real algebra defined by structure constants.
///
/// Relative to an ordered basis {e_1,...,e_n}, the bilinear product is fixed
/// by the n^3 coefficients p(i,j,k) of e_i * e_j = sum_k p(i,j,k) e_k.
/// Elements of the algebra are represented by their coordinate vectors in
/// R^n (the map phi). Instances are immutable after construction; no
/// algebraic properties are checked here (see analyze_algebra).
///
/// Indices are 0-based in code; reports that surface basis indices to users
/// (e.g. singular bilinear forms) use 1-based positions.
template <typename Scalar = double>
class Algebra {
 public:
  /// structure holds p(i,j,k) flattened as (i*n + j)*n + k.
  Algebra(Eigen::Index dim, std::vector<Scalar> structure, std::string name = {},
          std::vector<std::string> basis_labels = {})
      : n_(dim),
        p_(std::move(structure)),
        name_(std::move(name)),
        basis_labels_(std::move(basis_labels)) {
    if (n_ <= 0) throw std::invalid_argument("Algebra: dimension must be positive");
    if (p_.size() != static_cast<std::size_t>(n_) * n_ * n_)
      throw std::invalid_argument("Algebra: structure tensor must have n^3 entries");
    for (const Scalar& v : p_)
      if (!std::isfinite(static_cast<double>(v)))
        throw std::invalid_argument("Algebra: non-finite structure constant");
    if (!basis_labels_.empty() && basis_labels_.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("Algebra: basis label count must equal dimension");
    // Cache the matrices P_i with (P_i)(k,j) = p(i,j,k); left multiplication
    // by a is then M_L(a) = sum_i a_i P_i.
    left_basis_.reserve(static_cast<std::size_t>(n_));
    for (Eigen::Index i = 0; i < n_; ++i) {
      MatrixX<Scalar> Pi(n_, n_);
      for (Eigen::Index j = 0; j < n_; ++j)
        for (Eigen::Index k = 0; k < n_; ++k) Pi(k, j) = p(i, j, k);
      left_basis_.push_back(std::move(Pi));
    }
  }

  Eigen::Index dim() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  const std::vector<Scalar>& structure() const { return p_; }

  /// Structure constant p(i,j,k): coefficient of e_k in e_i * e_j. 0-based.
  Scalar p(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return p_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
  }

  /// The matrix representing left multiplication by basis element e_i,
  /// i.e. (P_i)(k,j) = p(i,j,k) so that phi(e_i * x) = P_i * phi(x).
  const MatrixX<Scalar>& left_basis_matrix(Eigen::Index i) const {
    return left_basis_[static_cast<std::size_t>(i)];
  }

  /// Label for basis element i ("e<i+1>" if no labels were given).
  std::string basis_label(Eigen::Index i) const {
    if (!basis_labels_.empty()) return basis_labels_[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i + 1);
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }

 private:
  Eigen::Index n_;
  std::vector<Scalar> p_;
  std::string name_;
  std::vector<std::string> basis_labels_;
  std::vector<MatrixX<Scalar>> left_basis_;
};

using AlgebraD = Algebra<double>;

/// Result of analyze_algebra. singular_bk_indices lists the 1-based k for
/// which the bilinear form matrix B_k is numerically singular.
template <typename Scalar = double>
struct AlgebraReport {
  bool commutative = false;
  bool associative = false;
  std::optional<VectorX<Scalar>> identity;
  bool is_hypercomplex = false;
  bool nondegenerate = false;
  std::vector<Eigen::Index> singular_bk_indices;
};

template <typename Scalar>
Algebra<Scalar> algebra_from_table(Eigen::Index n, std::vector<Scalar> structure,
                                   std::string name = {},
                                   std::vector<std::string> basis_labels = {}) {
  return Algebra<Scalar>(n, std::move(structure), std::move(name), std::move(basis_labels));
}

namespace detail {

template <typename Scalar>
void set_product(std::vector<Scalar>& p, Eigen::Index n, Eigen::Index i, Eigen::Index j,
                 std::initializer_list<Scalar> coeffs) {
  Eigen::Index k = 0;
  for (Scalar c : coeffs) p[static_cast<std::size_t>((i * n + j) * n + k++)] = c;
}

}  // namespace detail

enum class BuiltinAlgebra { real, complex, hyperbolic, dual, quaternion };

/// The named two- and four-dimensional standard algebras plus the reals.
/// For all of them the identity element is the first basis element.
template <typename Scalar = double>
Algebra<Scalar> builtin_algebra(BuiltinAlgebra which) {
  using detail::set_product;
  switch (which) {
    case BuiltinAlgebra::real:
      return Algebra<Scalar>(1, {Scalar(1)}, "real", {"1"});
    case BuiltinAlgebra::complex: {
      std::vector<Scalar> p(8, Scalar(0));
      set_product<Scalar>(p, 2, 0, 0, {1, 0});
      set_product<Scalar>(p, 2, 0, 1, {0, 1});
      set_product<Scalar>(p, 2, 1, 0, {0, 1});
      set_product<Scalar>(p, 2, 1, 1, {-1, 0});
      return Algebra<Scalar>(2, std::move(p), "complex", {"1", "i"});
    }
    case BuiltinAlgebra::hyperbolic: {
      std::vector<Scalar> p(8, Scalar(0));
      set_product<Scalar>(p, 2, 0, 0, {1, 0});
      set_product<Scalar>(p, 2, 0, 1, {0, 1});
      set_product<Scalar>(p, 2, 1, 0, {0, 1});
      set_product<Scalar>(p, 2, 1, 1, {1, 0});
      return Algebra<Scalar>(2, std::move(p), "hyperbolic", {"1", "j"});
    }
    case BuiltinAlgebra::dual: {
      std::vector<Scalar> p(8, Scalar(0));
      set_product<Scalar>(p, 2, 0, 0, {1, 0});
      set_product<Scalar>(p, 2, 0, 1, {0, 1});
      set_product<Scalar>(p, 2, 1, 0, {0, 1});
      set_product<Scalar>(p, 2, 1, 1, {0, 0});
      return Algebra<Scalar>(2, std::move(p), "dual", {"1", "eps"});
    }
    case BuiltinAlgebra::quaternion: {
      std::vector<Scalar> p(64, Scalar(0));
      // Basis {1, i, j, k}: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
      set_product<Scalar>(p, 4, 0, 0, {1, 0, 0, 0});
      set_product<Scalar>(p, 4, 0, 1, {0, 1, 0, 0});
      set_product<Scalar>(p, 4, 0, 2, {0, 0, 1, 0});
      set_product<Scalar>(p, 4, 0, 3, {0, 0, 0, 1});
      set_product<Scalar>(p, 4, 1, 0, {0, 1, 0, 0});
      set_product<Scalar>(p, 4, 1, 1, {-1, 0, 0, 0});
      set_product<Scalar>(p, 4, 1, 2, {0, 0, 0, 1});
      set_product<Scalar>(p, 4, 1, 3, {0, 0, -1, 0});
      set_product<Scalar>(p, 4, 2, 0, {0, 0, 1, 0});
      set_product<Scalar>(p, 4, 2, 1, {0, 0, 0, -1});
      set_product<Scalar>(p, 4, 2, 2, {-1, 0, 0, 0});
      set_product<Scalar>(p, 4, 2, 3, {0, 1, 0, 0});
      set_product<Scalar>(p, 4, 3, 0, {0, 0, 0, 1});
      set_product<Scalar>(p, 4, 3, 1, {0, 0, 1, 0});
      set_product<Scalar>(p, 4, 3, 2, {0, -1, 0, 0});
      set_product<Scalar>(p, 4, 3, 3, {-1, 0, 0, 0});
      return Algebra<Scalar>(4, std::move(p), "quaternion", {"1", "i", "j", "k"});
    }
  }
  throw std::invalid_argument("builtin_algebra: unknown algebra");
}

template <typename Scalar = double>
Algebra<Scalar> builtin_algebra(std::string_view name) {
  if (name == "real") return builtin_algebra<Scalar>(BuiltinAlgebra::real);
  if (name == "complex") return builtin_algebra<Scalar>(BuiltinAlgebra::complex);
  if (name == "hyperbolic") return builtin_algebra<Scalar>(BuiltinAlgebra::hyperbolic);
  if (name == "dual") return builtin_algebra<Scalar>(BuiltinAlgebra::dual);
  if (name == "quaternion") return builtin_algebra<Scalar>(BuiltinAlgebra::quaternion);
  throw std::invalid_argument("builtin_algebra: unknown algebra '" + std::string(name) + "'");
}

/// Builds the algebra whose left-multiplication matrices of basis elements
/// are the given P_1..P_n, i.e. p(i,j,k) = P_i(k,j). Products then evaluate
/// as x*y = phi^{-1}(sum_i x_i P_i phi(y)).
template <typename Scalar>
Algebra<Scalar> parametrized_algebra(const std::vector<MatrixX<Scalar>>& P,
                                     std::string name = {}) {
  const auto n = static_cast<Eigen::Index>(P.size());
  if (n == 0) throw std::invalid_argument("parametrized_algebra: need at least one matrix");
  std::vector<Scalar> p(static_cast<std::size_t>(n) * n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (P[static_cast<std::size_t>(i)].rows() != n || P[static_cast<std::size_t>(i)].cols() != n)
      throw std::invalid_argument("parametrized_algebra: every matrix must be n x n");
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        p[static_cast<std::size_t>((i * n + j) * n + k)] = P[static_cast<std::size_t>(i)](k, j);
  }
  return Algebra<Scalar>(n, std::move(p), std::move(name));
}

/// Product of two elements: z_k = phi(x)^T B_k phi(y) with (B_k)(i,j) = p(i,j,k).
template <typename Scalar, typename DX, typename DY>
VectorX<Scalar> multiply(const Algebra<Scalar>& A, const Eigen::MatrixBase<DX>& x,
                         const Eigen::MatrixBase<DY>& y) {
  static_assert(std::is_same_v<typename DX::Scalar, Scalar> &&
                std::is_same_v<typename DY::Scalar, Scalar>);
  const Eigen::Index n = A.dim();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("multiply: element size does not match algebra dimension");
  VectorX<Scalar> z = VectorX<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar c = x(i) * y(j);
      for (Eigen::Index k = 0; k < n; ++k) z(k) += c * A.p(i, j, k);
    }
  return z;
}

/// Matrix of left multiplication by a: M_L(a) = sum_i a_i P_i, so that
/// M_L(a) * phi(x) = phi(a*x) for every x.
template <typename Scalar, typename DA>
MatrixX<Scalar> left_mult_matrix(const Algebra<Scalar>& A, const Eigen::MatrixBase<DA>& a) {
  static_assert(std::is_same_v<typename DA::Scalar, Scalar>);
  const Eigen::Index n = A.dim();
  if (a.size() != n)
    throw std::invalid_argument("left_mult_matrix: element size does not match algebra dimension");
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m += a(i) * A.left_basis_matrix(i);
  return m;
}

/// The bilinear form matrices B_1..B_n with (B_k)(i,j) = p(i,j,k).
template <typename Scalar>
std::vector<MatrixX<Scalar>> bilinear_matrices(const Algebra<Scalar>& A) {
  const Eigen::Index n = A.dim();
  std::vector<MatrixX<Scalar>> bs;
  bs.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    MatrixX<Scalar> bk(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) bk(i, j) = A.p(i, j, k);
    bs.push_back(std::move(bk));
  }
  return bs;
}

/// Basis-relative absolute value |x| = ||phi(x)||_2.
template <typename Scalar, typename DX>
Scalar abs_value(const Algebra<Scalar>& A, const Eigen::MatrixBase<DX>& x) {
  static_assert(std::is_same_v<typename DX::Scalar, Scalar>);
  if (x.size() != A.dim())
    throw std::invalid_argument("abs_value: element size does not match algebra dimension");
  return x.norm();
}

/// Checks commutativity, associativity, existence of a two-sided identity
/// and non-degeneracy of the bilinear forms.
///
/// The identity candidate is the least-squares solution of M_L(e) = I;
/// it is accepted only if the residuals of both e*x = x and x*e = x are
/// within tol entrywise. A form B_k counts as singular when its smallest
/// singular value is <= tol times the largest (or <= tol if B_k = 0).
template <typename Scalar>
AlgebraReport<Scalar> analyze_algebra(const Algebra<Scalar>& A, Scalar tol = Scalar(1e-9)) {
  if (!(tol > Scalar(0))) throw std::invalid_argument("analyze_algebra: tol must be positive");
  const Eigen::Index n = A.dim();
  AlgebraReport<Scalar> report;

  Scalar comm_dev = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        comm_dev = std::max(comm_dev, std::abs(A.p(i, j, k) - A.p(j, i, k)));
  report.commutative = comm_dev <= tol;

  // (e_i e_j) e_k = e_i (e_j e_k) in coordinates:
  // sum_m p(i,j,m) p(m,k,l) = sum_m p(j,k,m) p(i,m,l) for all i,j,k,l.
  Scalar assoc_dev = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          Scalar lhs = 0, rhs = 0;
          for (Eigen::Index m = 0; m < n; ++m) {
            lhs += A.p(i, j, m) * A.p(m, k, l);
            rhs += A.p(j, k, m) * A.p(i, m, l);
          }
          assoc_dev = std::max(assoc_dev, std::abs(lhs - rhs));
        }
  report.associative = assoc_dev <= tol;

  // Identity: solve sum_i e_i P_i = I in the least-squares sense, then
  // verify the candidate from both sides.
  MatrixX<Scalar> coeffs(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    coeffs.col(i) = A.left_basis_matrix(i).reshaped();
  const MatrixX<Scalar> eye = MatrixX<Scalar>::Identity(n, n);
  VectorX<Scalar> cand = coeffs.colPivHouseholderQr().solve(eye.reshaped());
  const Scalar left_resid = (left_mult_matrix(A, cand) - eye).cwiseAbs().maxCoeff();
  Scalar right_resid = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      Scalar s = 0;
      for (Eigen::Index j = 0; j < n; ++j) s += cand(j) * A.p(i, j, k);
      right_resid = std::max(right_resid, std::abs(s - (i == k ? Scalar(1) : Scalar(0))));
    }
  if (left_resid <= tol && right_resid <= tol) {
    report.identity = cand;
    report.is_hypercomplex = true;
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    MatrixX<Scalar> bk(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) bk(i, j) = A.p(i, j, k);
    Eigen::JacobiSVD<MatrixX<Scalar>> svd(bk);
    const Scalar smax = svd.singularValues()(0);
    const Scalar smin = svd.singularValues()(n - 1);
    const Scalar threshold = tol * (smax > Scalar(0) ? smax : Scalar(1));
    if (!(smin > threshold)) report.singular_bk_indices.push_back(k + 1);
  }
  report.nondegenerate = report.singular_bk_indices.empty();
  return report;
}

}  // namespace vnet
