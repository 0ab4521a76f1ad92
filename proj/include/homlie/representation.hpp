#pragma once

#include "homlie/algebra.hpp"
#include "homlie/cochain.hpp"

#include <span>
#include <vector>

namespace homlie {

/// Raw action data: rho[i] = rho(e_i) on an m-dimensional module, plus A in gl(V).
/// Nothing is checked; this is what files and random generators produce.
struct RepresentationData {
  Index module_dim = 0;
  std::vector<Matrix> rho;
  Matrix A;
};

/// rho_A(alpha u)∘A = A∘rho_A(u) and rho_A([u,v])∘A = rho_A(alpha u)∘rho_A(v) - rho_A(alpha v)∘rho_A(u),
/// checked on basis elements and pairs.
VerificationReport is_representation(const HomLieAlgebra& g, const RepresentationData& data);

/// A representation rho_A of a hom-Lie algebra; the axioms are verified on
/// construction (Errc::InvalidRepresentation).
class Representation {
 public:
  Representation(const HomLieAlgebra& g, RepresentationData data);

  Index algebra_dim() const { return static_cast<Index>(data_.rho.size()); }
  Index module_dim() const { return data_.module_dim; }
  const std::vector<Matrix>& rho() const { return data_.rho; }
  const Matrix& A() const { return data_.A; }
  const RepresentationData& data() const { return data_; }

  /// rho(x) for an arbitrary element x of g.
  Matrix act(const Vector& x) const;

 private:
  RepresentationData data_;
};

/// m = 1, rho = 0, A = 1. Requires g multiplicative.
Representation trivial_representation(const HomLieAlgebra& g);

/// ad_s(u)(v) = [alpha^s u, v], A = alpha. Requires g multiplicative, and
/// regular when s < 0.
Representation adjoint_representation(const HomLieAlgebra& g, int s);

/// g ⊕ V with [(u,X),(v,Y)] = ([u,v], rho(u)Y - rho(v)X) and twist diag(alpha, A).
HomLieAlgebra semidirect_product(const HomLieAlgebra& g, const Representation& rep);

/// Same bracket built from unchecked data, so non-representations can be fed in.
HomLieAlgebra semidirect_product_unchecked(const HomLieAlgebra& g, const RepresentationData& data);

/// g ⊕ Q with [(u,s),(v,t)] = ([u,v], theta(u,v)) and twist diag(alpha, 1).
/// theta must satisfy theta∘(alpha, alpha) = theta (Errc::NotHomCochain); it
/// need not be closed, and the result is a multiplicative hom-Lie algebra
/// exactly when d_T theta = 0.
HomLieAlgebra central_extension(const HomLieAlgebra& g, const Cochain& theta);

struct CentralExtensionIsomorphism {
  LinearMap map;
  VerificationReport report;
};

/// For theta1 - theta2 = d_T f, the map (u, s) -> (u, s + f(u)) between the two
/// central extensions, together with a check that it is an isomorphism of
/// hom-Lie algebras commuting with the twists.
CentralExtensionIsomorphism central_extension_isomorphism(const HomLieAlgebra& g, const Cochain& theta1,
                                                          const Cochain& theta2, const Cochain& f);

}  // namespace homlie
