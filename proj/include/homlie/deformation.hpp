#pragma once

#include "homlie/algebra.hpp"
#include "homlie/cochain.hpp"

namespace homlie {

/// A g-valued 2-cochain omega together with the two conditions under which
/// [u,v]_t = [u,v] + t omega(u,v) is a hom-Lie bracket for every t:
///   closed:           omega(alpha u,[v,w]) + [alpha u, omega(v,w)] + c.p. = 0
///   omega_hom_jacobi: omega(alpha u, omega(v,w)) + c.p. = 0
struct DeformationDatum {
  Cochain omega;
  bool closed = false;
  bool omega_hom_jacobi = false;
};

/// Builds the degree-2 g-valued cochain with omega(e_i, e_j) = [e_i, e_j].
Cochain bracket_cochain(const HomLieAlgebra& g);

/// Checks both deformation conditions on basis triples. Requires g regular
/// (Errc::NotRegular) and omega∘alpha = alpha∘omega (Errc::NotHomCochain).
/// The closedness condition is cross-checked against d_{-1} omega = 0.
VerificationReport generates_deformation(const HomLieAlgebra& g, const Cochain& omega);

/// (g, [.,.] + t omega, alpha). Same preconditions as generates_deformation.
HomLieAlgebra deformed_bracket_at(const HomLieAlgebra& g, const Cochain& omega, const Rational& t);

/// omega(u,v) = [u,v]_N = [Nu,v] + [u,Nv] - N[u,v]. Requires N alpha = alpha N.
DeformationDatum nijenhuis_bracket(const HomLieAlgebra& g, const Matrix& op);

/// [Nu, Nv] = N[u,v]_N on basis pairs.
VerificationReport is_hom_nijenhuis(const HomLieAlgebra& g, const Matrix& op);

/// T_t[u,v]_t = [T_t u, T_t v] for T_t = Id + tN and omega = [.,.]_N, as a
/// polynomial identity in t (coefficients of t^0, t^1, t^2), plus an
/// independent evaluation at t = 1, -1, 2. Errc::NotNijenhuis when N is not
/// a hom-Nijenhuis operator.
VerificationReport check_trivializes(const HomLieAlgebra& g, const Matrix& op);

}  // namespace homlie
