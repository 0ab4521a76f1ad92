#pragma once

#include "homlie/linalg.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homlie {

/// One structure-constant entry: [e_i, e_j] = coeffs.
struct BracketEntry {
  Index i = 0;
  Index j = 0;
  Vector coeffs;
};

/// A finite-dimensional hom-Lie algebra (g, [.,.], alpha) over Q, given by
/// structure constants on the basis e_0..e_{n-1} and the twisting matrix alpha
/// (column j = alpha(e_j)).
///
/// Only [e_i, e_j] with i < j is stored; [e_j, e_i] = -[e_i, e_j] and
/// [e_i, e_i] = 0 hold structurally. Neither the hom-Jacobi identity nor
/// multiplicativity is enforced here: both are queried properties.
class HomLieAlgebra {
 public:
  HomLieAlgebra() = default;

  /// Entries with i > j are stored negated; i == j is accepted only with a
  /// zero coefficient vector. Repeated pairs accumulate.
  HomLieAlgebra(Index dim, const std::vector<BracketEntry>& brackets, Matrix alpha,
                std::vector<std::string> labels = {});

  static HomLieAlgebra abelian(Index dim);

  Index dim() const { return dim_; }
  const Matrix& alpha() const { return alpha_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] for any i, j.
  Vector bracket_basis(Index i, Index j) const;

  /// Bilinear extension of the structure constants.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;

  /// Nonzero [e_i, e_j] with i < j, in lexicographic order.
  std::vector<BracketEntry> brackets() const;

  HomLieAlgebra with_alpha(Matrix alpha) const;

  friend bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b);

 private:
  Index pair_index(Index i, Index j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }
  void check_vector(const Vector& x) const;

  Index dim_ = 0;
  Matrix alpha_;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;  // upper triangle, i < j
};

/// Concrete witness for a failed identity: the basis indices it was
/// evaluated on and the nonzero defect.
struct Counterexample {
  std::vector<Index> indices;
  Vector defect;
  std::string context;
};

struct VerificationReport {
  std::string property;
  bool holds = true;
  std::optional<Counterexample> counterexample;

  static VerificationReport pass(std::string property) { return {std::move(property), true, std::nullopt}; }
  static VerificationReport fail(std::string property, std::vector<Index> indices, Vector defect,
                                 std::string context = {}) {
    return {std::move(property), false, Counterexample{std::move(indices), std::move(defect), std::move(context)}};
  }

  explicit operator bool() const { return holds; }
};

/// A linear map between spaces of the given dimensions; matrix is target x source.
class LinearMap {
 public:
  LinearMap(Index source_dim, Index target_dim, Matrix matrix);
  explicit LinearMap(Matrix matrix) : LinearMap(matrix.cols(), matrix.rows(), matrix) {}

  Index source_dim() const { return source_dim_; }
  Index target_dim() const { return target_dim_; }
  const Matrix& matrix() const { return matrix_; }
  Vector operator()(const Vector& x) const { return matrix_ * x; }

 private:
  Index source_dim_;
  Index target_dim_;
  Matrix matrix_;
};

inline Vector bracket(const HomLieAlgebra& g, const Vector& x, const Vector& y) { return g.bracket(x, y); }

/// [alpha(u),[v,w]] + [alpha(v),[w,u]] + [alpha(w),[u,v]] = 0, checked on
/// basis triples i < j < k. The expression is trilinear and alternating, so
/// those triples decide it for all of g.
VerificationReport verify_hom_jacobi(const HomLieAlgebra& g);

/// alpha[e_i, e_j] = [alpha e_i, alpha e_j] for i < j.
VerificationReport is_multiplicative(const HomLieAlgebra& g);

/// Multiplicative with invertible alpha.
bool is_regular(const HomLieAlgebra& g);

bool alpha_invertible(const HomLieAlgebra& g);

/// alpha^s; negative s needs an invertible alpha (Errc::NotRegular otherwise).
Matrix alpha_power(const HomLieAlgebra& g, int s);

HomLieAlgebra direct_sum(const HomLieAlgebra& g, const HomLieAlgebra& k);

/// Checks phi[e_i,e_j] = [phi e_i, phi e_j] (i < j) and phi∘alpha = beta∘phi.
VerificationReport morphism_report(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi);
bool is_morphism(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi);

/// Decides whether the graph {(u, phi u)} is a hom-Lie subalgebra of g ⊕ k.
bool graph_is_subalgebra(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi);

/// alpha(h) ⊆ h and [h, h] ⊆ h for h = span(h_basis).
bool is_subalgebra(const HomLieAlgebra& g, const std::vector<Vector>& h_basis);

/// The algebra expressed in the basis e'_p = e_{perm[p]}.
HomLieAlgebra relabel(const HomLieAlgebra& g, std::span<const Index> perm);

/// True when some permutation of the basis of `a` makes it structurally equal to `b`.
bool equal_up_to_relabeling(const HomLieAlgebra& a, const HomLieAlgebra& b);

/// {u : [u, v] = 0 for all v}.
Subspace center(const HomLieAlgebra& g);

}  // namespace homlie
