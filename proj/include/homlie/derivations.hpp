#pragma once

#include "homlie/algebra.hpp"

#include <vector>

namespace homlie {

/// Operators D on g are identified with vectors in Q^{n^2} by column-major
/// vectorization: coordinate j*n + a is the a-th component of D(e_j).
Vector vectorize(const Matrix& op);
Matrix unvectorize(const Vector& coords, Index n);

/// A subspace of operator space holding alpha^k-derivations (or the inner ones).
struct GradedDerivationSpace {
  int grade = 0;
  Index algebra_dim = 0;
  Subspace space;

  Index dim() const { return space.dim(); }
  std::vector<Matrix> operators() const;
  bool contains(const Matrix& op) const { return space.contains(vectorize(op)); }
};

/// Der_{alpha^k}(g): D alpha = alpha D and D[u,v] = [Du, alpha^k v] + [alpha^k u, Dv].
/// Requires g multiplicative (Errc::NotMultiplicative); k < 0 also needs an
/// invertible alpha (Errc::NotRegular).
GradedDerivationSpace derivation_space(const HomLieAlgebra& g, int k);

/// Inn_{alpha^k}(g) = span{ v -> [alpha^{k-1} v, u] : alpha(u) = u }.
/// k <= 0 needs a regular algebra.
GradedDerivationSpace inner_derivation_space(const HomLieAlgebra& g, int k);

VerificationReport is_derivation(const HomLieAlgebra& g, int k, const Matrix& op);

/// D∘D' - D'∘D.
Matrix commutator(const Matrix& d, const Matrix& dp);

/// The algebra on g ⊕ Q·D with [D, u] = D(u) and alpha_D = diag(alpha, 1).
/// The new basis vector is the last one. It is a multiplicative hom-Lie
/// algebra exactly when D is an alpha-derivation; that is not enforced here.
HomLieAlgebra derivation_extension(const HomLieAlgebra& g, const Matrix& op);

}  // namespace homlie
