#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Every routine compares against exact zero; nothing here is meant for
// floating-point scalars.

#include "homlie/error.hpp"
#include "homlie/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace homlie {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <typename Scalar>
MatrixX<Scalar> identity(Index n) {
  return MatrixX<Scalar>::Identity(n, n);
}

inline Matrix identity(Index n) { return identity<Rational>(n); }

template <typename Scalar>
VectorX<Scalar> unit_vector(Index n, Index i) {
  VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
  v(i) = Scalar(1);
  return v;
}

inline Vector unit_vector(Index n, Index i) { return unit_vector<Rational>(n, i); }

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;  // rank rows, zero rows dropped
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> r = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index p = row;
    while (p < r.rows() && r(p, col) == Scalar(0)) ++p;
    if (p == r.rows()) continue;
    if (p != row) r.row(p).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == Scalar(0)) continue;
      const Scalar factor = r(i, col);
      for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {r.topRows(row), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return reduced_row_echelon(m).rank();
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  MatrixX<Scalar> a = m;
  const Index n = a.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && a(p, col) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = Scalar(1) / a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col) == Scalar(0)) continue;
      const Scalar factor = a(i, col) * inv;
      for (Index j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; throws Errc::Singular when rank < dim.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const Index n = m.rows();
  MatrixX<Scalar> augmented(n, 2 * n);
  augmented << m, identity<Scalar>(n);
  auto ech = reduced_row_echelon(augmented);
  if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw Error(Errc::Singular, "matrix of size " + std::to_string(n) + " is not invertible");
  return ech.reduced.rightCols(n);
}

/// A linear subspace of Scalar^ambient, stored as the reduced row echelon
/// basis of its rows. Two equal subspaces have identical bases, so operator==
/// is structural.
template <typename Scalar>
class BasicSubspace {
 public:
  using MatrixType = MatrixX<Scalar>;
  using VectorType = VectorX<Scalar>;

  BasicSubspace() = default;

  static BasicSubspace zero(Index ambient) { return BasicSubspace(ambient, MatrixType(0, ambient), {}); }

  static BasicSubspace full(Index ambient) { return from_rows(identity<Scalar>(ambient)); }

  /// Row space of `rows`.
  template <typename Derived>
  static BasicSubspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    auto ech = reduced_row_echelon(rows);
    return BasicSubspace(rows.cols(), std::move(ech.reduced), std::move(ech.pivots));
  }

  /// Column space of `cols`.
  template <typename Derived>
  static BasicSubspace from_columns(const Eigen::MatrixBase<Derived>& cols) {
    return from_rows(cols.transpose());
  }

  static BasicSubspace span(Index ambient, const std::vector<VectorType>& vectors) {
    MatrixType rows(static_cast<Index>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient)
        throw Error(Errc::DimensionMismatch, "spanning vector has wrong length");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return from_rows(rows);
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }

  /// Basis vectors as rows (reduced echelon form).
  const MatrixType& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  std::vector<VectorType> basis_vectors() const {
    std::vector<VectorType> out;
    for (Index i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).transpose());
    return out;
  }

  /// Residual of v after elimination against the echelon basis; zero iff v is in the span.
  template <typename Derived>
  VectorType reduce(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    VectorType r = v;
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = r(pivots_[i]);
      if (c == Scalar(0)) continue;
      r -= c * basis_.row(i).transpose();
    }
    return r;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return is_zero(reduce(v));
  }

  bool contains(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_) throw Error(Errc::DimensionMismatch, "subspaces in different ambient spaces");
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i).transpose())) return false;
    return true;
  }

  /// Coordinates of a member vector in the echelon basis (its pivot entries).
  template <typename Derived>
  VectorType coordinates(const Eigen::MatrixBase<Derived>& v) const {
    VectorType c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  BasicSubspace(Index ambient, MatrixType basis, std::vector<Index> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Index ambient_ = 0;
  MatrixType basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

template <typename Scalar>
BasicSubspace<Scalar> subspace_sum(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces in different ambient spaces");
  MatrixX<Scalar> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return BasicSubspace<Scalar>::from_rows(rows);
}

/// {x : M x = 0}, with dim = cols(M) - rank(M).
template <typename Derived>
BasicSubspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> rows(cols - ech.rank(), cols);
  rows.setZero();
  Index next = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    rows(next, free) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r) rows(next, ech.pivots[r]) = -ech.reduced(r, free);
    ++next;
  }
  return BasicSubspace<Scalar>::from_rows(rows);
}

/// kernel(M - I).
template <typename Derived>
BasicSubspace<typename Derived::Scalar> fixed_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "fixed space of a non-square matrix");
  return kernel(m - identity<Scalar>(m.rows()));
}

template <typename Scalar>
BasicSubspace<Scalar> intersect(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces in different ambient spaces");
  // x in b  <=>  annihilator(b) x = 0; parametrize x = a.basis()^T c.
  const auto annihilator = kernel(b.basis());
  const MatrixX<Scalar> constraint = annihilator.basis() * a.basis().transpose();
  const auto coeffs = kernel(constraint);
  return BasicSubspace<Scalar>::from_rows(coeffs.basis() * a.basis());
}

/// dim Z - dim B, after checking B ⊆ Z (Errc::NotContained otherwise).
template <typename Scalar>
Index quotient_dim(const BasicSubspace<Scalar>& z, const BasicSubspace<Scalar>& b) {
  if (!z.contains(b)) throw Error(Errc::NotContained, "subspace is not contained in the numerator");
  return z.dim() - b.dim();
}

/// Echelon basis vectors of Z that complete B's basis to a basis of Z,
/// picked greedily in echelon order (deterministic for fixed Z and B).
template <typename Scalar>
std::vector<VectorX<Scalar>> complement_basis(const BasicSubspace<Scalar>& z, const BasicSubspace<Scalar>& b) {
  std::vector<VectorX<Scalar>> out;
  BasicSubspace<Scalar> acc = b;
  for (const auto& v : z.basis_vectors()) {
    if (acc.contains(v)) continue;
    out.push_back(v);
    acc = subspace_sum(acc, BasicSubspace<Scalar>::span(z.ambient_dim(), {v}));
  }
  return out;
}

}  // namespace homlie
