#pragma once

#include "homlie/cochain.hpp"
#include "homlie/representation.hpp"

#include <vector>

namespace homlie {

/// C^k_{alpha,A}(g; V) = {f : A∘f = f∘alpha}, as a subspace of the full
/// degree-k cochain coordinates.
struct HomCochainSpace {
  Index degree = 0;
  Index algebra_dim = 0;
  Index module_dim = 0;
  Subspace space;

  Index dim() const { return space.dim(); }
  std::vector<Cochain> basis() const;
  /// Basis as matrix columns in full cochain coordinates.
  Matrix basis_matrix() const { return space.basis().transpose(); }
  bool contains(const Cochain& f) const { return space.contains(f.coords()); }
};

struct CohomologyResult {
  Index degree = 0;
  Index dim_Z = 0;
  Index dim_B = 0;
  Index dim_H = 0;
  Subspace cocycles;     // Z^k, full coordinates
  Subspace coboundaries; // B^k, full coordinates
  std::vector<Cochain> representatives;
};

/// Errc::DegreeOutOfRange for k < 0; degrees above dim g give the zero space.
HomCochainSpace hom_cochain_space(const HomLieAlgebra& g, const Representation& rep, Index k);

bool is_hom_cochain(const HomLieAlgebra& g, const Representation& rep, const Cochain& f);

/// d f(u_1..u_{k+1}) = sum_i (-1)^{i+1} rho(alpha^k u_i) f(.., û_i, ..)
///                   + sum_{i<j} (-1)^{i+j} f([u_i,u_j], alpha u_1, .., û_i, .., û_j, .., alpha u_{k+1}).
/// f must be a hom-cochain (Errc::NotHomCochain).
Cochain coboundary_apply(const HomLieAlgebra& g, const Representation& rep, const Cochain& f);

/// The same formula without the membership check; d is well defined on all
/// skew cochains, it just need not square to zero off the hom-subspace.
Cochain coboundary_unchecked(const HomLieAlgebra& g, const Representation& rep, const Cochain& f);

/// Matrix of d on full degree-k coordinates (all cochains, not only hom ones).
Matrix full_coboundary_matrix(const HomLieAlgebra& g, const Representation& rep, Index k);

/// Columns: d applied to the basis of hom_cochain_space(g, rep, k), in full
/// degree-(k+1) coordinates.
Matrix coboundary_matrix(const HomLieAlgebra& g, const Representation& rep, Index k);

/// Z^k inside C^k_{alpha,A}, B^k = d(C^{k-1}_{alpha,A}), and representatives of
/// a complement of B^k in Z^k.
CohomologyResult cohomology(const HomLieAlgebra& g, const Representation& rep, Index k);

/// d∘d = 0 on every hom-cochain of degree 0..max_degree.
VerificationReport d_squared_is_zero(const HomLieAlgebra& g, const Representation& rep, Index max_degree);

}  // namespace homlie
