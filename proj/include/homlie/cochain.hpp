#pragma once

#include "homlie/linalg.hpp"

#include <span>
#include <vector>

namespace homlie {

using Tuple = std::vector<Index>;

/// Strictly increasing k-tuples from {0..n-1}, in lexicographic order.
const std::vector<Tuple>& increasing_tuples(Index n, Index k);

/// Position of a strictly increasing tuple in increasing_tuples(n, k).
Index tuple_rank(Index n, std::span<const Index> tuple);

Index binomial(Index n, Index k);

/// A skew-symmetric k-linear map g^k -> V, dim g = n, dim V = m.
///
/// Stored by its values on strictly increasing basis tuples. Coordinates are
/// ordered by tuple (lexicographic) and then by module coordinate, so
/// coordinate tuple_rank(I) * m + a is the a-th component of f(e_I).
/// A degree-0 cochain is a single vector of V.
class Cochain {
 public:
  Cochain() = default;
  Cochain(Index algebra_dim, Index degree, Index module_dim);
  Cochain(Index algebra_dim, Index degree, Index module_dim, Vector coords);

  /// Degree-1, V = g cochain of an operator (column j = D(e_j)).
  static Cochain from_operator(const Matrix& op);

  /// Scalar (m = 1) cochain.
  static Cochain scalar(Index algebra_dim, Index degree);

  Index algebra_dim() const { return n_; }
  Index degree() const { return k_; }
  Index module_dim() const { return m_; }
  const Vector& coords() const { return coords_; }

  /// Value on an arbitrary basis tuple: sign of the sorting permutation, zero on repeats.
  Vector value(std::span<const Index> tuple) const;
  void set_value(std::span<const Index> tuple, const Vector& v);

  /// Multilinear evaluation on arbitrary vectors (one per slot).
  Vector evaluate(std::span<const Vector> args) const;

  /// The operator of a degree-1 cochain with values in an n-dimensional module.
  Matrix as_operator() const;

  /// f∘(alpha, ..., alpha).
  Cochain pullback(const Matrix& alpha) const;

  /// A∘f.
  Cochain pushforward(const Matrix& a) const;

  bool is_zero() const { return homlie::is_zero(coords_); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.m_ == b.m_ && a.coords_ == b.coords_;
  }
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend Cochain operator*(const Rational& s, const Cochain& a);

 private:
  void check_same_shape(const Cochain& other) const;

  Index n_ = 0;
  Index k_ = 0;
  Index m_ = 0;
  Vector coords_;
};

/// Dimension of the full cochain space: m * C(n, k) (zero when k > n).
inline Index cochain_space_dim(Index n, Index k, Index m) { return m * binomial(n, k); }

/// Matrix of f -> f∘(alpha, ..., alpha) on full degree-k coordinates.
Matrix pullback_matrix(const Matrix& alpha, Index k, Index m);

}  // namespace homlie
