#include "homlie/deformation.hpp"

#include "homlie/cohomology.hpp"
#include "homlie/representation.hpp"

namespace homlie {

namespace {

Vector omega_at(const Cochain& omega, const Vector& x, const Vector& y) {
  const Vector args[] = {x, y};
  return omega.evaluate(args);
}

void require_omega(const HomLieAlgebra& g, const Cochain& omega) {
  if (omega.algebra_dim() != g.dim() || omega.degree() != 2 || omega.module_dim() != g.dim())
    throw Error(Errc::DimensionMismatch, "omega must be a g-valued 2-cochain");
  if (!(omega.pullback(g.alpha()) == omega.pushforward(g.alpha())))
    throw Error(Errc::NotHomCochain, "omega does not commute with alpha");
}

void require_regular(const HomLieAlgebra& g) {
  if (!is_multiplicative(g).holds) throw Error(Errc::NotRegular, "algebra is not multiplicative");
  if (!alpha_invertible(g)) throw Error(Errc::NotRegular, "alpha is not invertible");
}

void require_commuting(const HomLieAlgebra& g, const Matrix& op) {
  if (op.rows() != g.dim() || op.cols() != g.dim()) throw Error(Errc::DimensionMismatch, "operator has wrong shape");
  if (!(op * g.alpha() == g.alpha() * op)) throw Error(Errc::NotCommutingWithAlpha, "N alpha != alpha N");
}

// Cyclic sums over u, v, w; both are alternating trilinear, so i < j < k suffices.
Vector closedness_defect(const HomLieAlgebra& g, const Cochain& omega, Index i, Index j, Index k) {
  const Matrix& a = g.alpha();
  const Index n = g.dim();
  const Vector u = unit_vector(n, i), v = unit_vector(n, j), w = unit_vector(n, k);
  auto term = [&](const Vector& x, const Vector& y, const Vector& z) -> Vector {
    return omega_at(omega, a * x, g.bracket(y, z)) + g.bracket(a * x, omega_at(omega, y, z));
  };
  return term(u, v, w) + term(v, w, u) + term(w, u, v);
}

Vector omega_jacobi_defect(const HomLieAlgebra& g, const Cochain& omega, Index i, Index j, Index k) {
  const Matrix& a = g.alpha();
  const Index n = g.dim();
  const Vector u = unit_vector(n, i), v = unit_vector(n, j), w = unit_vector(n, k);
  auto term = [&](const Vector& x, const Vector& y, const Vector& z) -> Vector {
    return omega_at(omega, a * x, omega_at(omega, y, z));
  };
  return term(u, v, w) + term(v, w, u) + term(w, u, v);
}

// Returns the first failing triple, if any.
std::optional<std::pair<Tuple, Vector>> first_defect(const HomLieAlgebra& g, const Cochain& omega,
                                                     Vector (*defect)(const HomLieAlgebra&, const Cochain&, Index, Index, Index)) {
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vector d = defect(g, omega, i, j, k);
        if (!is_zero(d)) return std::pair{Tuple{i, j, k}, std::move(d)};
      }
  return std::nullopt;
}

Vector nijenhuis_pair(const HomLieAlgebra& g, const Matrix& op, const Vector& x, const Vector& y) {
  return g.bracket(op * x, y) + g.bracket(x, op * y) - op * g.bracket(x, y);
}

}  // namespace

Cochain bracket_cochain(const HomLieAlgebra& g) {
  const Index n = g.dim();
  Cochain omega(n, 2, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Index ij[] = {i, j};
      omega.set_value(ij, g.bracket_basis(i, j));
    }
  return omega;
}

VerificationReport generates_deformation(const HomLieAlgebra& g, const Cochain& omega) {
  require_regular(g);
  require_omega(g, omega);
  const auto closed = first_defect(g, omega, closedness_defect);

  // Cross-check: the closedness condition is d_{-1} omega = 0.
  const Cochain d_omega = coboundary_apply(g, adjoint_representation(g, -1), omega);
  if (d_omega.is_zero() != !closed.has_value())
    throw std::logic_error("deformation closedness disagrees with d_{-1} omega");

  if (closed) return VerificationReport::fail("generates deformation", closed->first, closed->second, "omega is not d_{-1}-closed");
  if (const auto jac = first_defect(g, omega, omega_jacobi_defect))
    return VerificationReport::fail("generates deformation", jac->first, jac->second, "omega fails hom-Jacobi");
  return VerificationReport::pass("generates deformation");
}

HomLieAlgebra deformed_bracket_at(const HomLieAlgebra& g, const Cochain& omega, const Rational& t) {
  require_regular(g);
  require_omega(g, omega);
  const Index n = g.dim();
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Index ij[] = {i, j};
      Vector c = g.bracket_basis(i, j) + t * omega.value(ij);
      if (!is_zero(c)) entries.push_back({i, j, std::move(c)});
    }
  return HomLieAlgebra(n, entries, g.alpha(), g.labels());
}

DeformationDatum nijenhuis_bracket(const HomLieAlgebra& g, const Matrix& op) {
  require_commuting(g, op);
  const Index n = g.dim();
  DeformationDatum datum{Cochain(n, 2, n)};
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Index ij[] = {i, j};
      datum.omega.set_value(ij, nijenhuis_pair(g, op, unit_vector(n, i), unit_vector(n, j)));
    }
  datum.closed = !first_defect(g, datum.omega, closedness_defect).has_value();
  datum.omega_hom_jacobi = !first_defect(g, datum.omega, omega_jacobi_defect).has_value();
  return datum;
}

VerificationReport is_hom_nijenhuis(const HomLieAlgebra& g, const Matrix& op) {
  require_commuting(g, op);
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Vector u = unit_vector(n, i), v = unit_vector(n, j);
      const Vector defect = g.bracket(op * u, op * v) - op * nijenhuis_pair(g, op, u, v);
      if (!is_zero(defect)) return VerificationReport::fail("hom-Nijenhuis", {i, j}, defect);
    }
  return VerificationReport::pass("hom-Nijenhuis");
}

VerificationReport check_trivializes(const HomLieAlgebra& g, const Matrix& op) {
  if (!is_hom_nijenhuis(g, op).holds) throw Error(Errc::NotNijenhuis, "N is not a hom-Nijenhuis operator");
  const Index n = g.dim();
  const std::string name = "trivial deformation";
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Vector u = unit_vector(n, i), v = unit_vector(n, j);
      const Vector br = g.bracket(u, v);
      const Vector br_n = nijenhuis_pair(g, op, u, v);
      // T_t[u,v]_t = [u,v] + t([u,v]_N + N[u,v]) + t^2 N[u,v]_N
      // [T_t u, T_t v] = [u,v] + t([Nu,v] + [u,Nv]) + t^2 [Nu,Nv]
      const Vector c1 = br_n + op * br - g.bracket(op * u, v) - g.bracket(u, op * v);
      if (!is_zero(c1)) return VerificationReport::fail(name, {i, j}, c1, "coefficient of t");
      const Vector c2 = op * br_n - g.bracket(op * u, op * v);
      if (!is_zero(c2)) return VerificationReport::fail(name, {i, j}, c2, "coefficient of t^2");
      for (const Rational t : {Rational(1), Rational(-1), Rational(2)}) {
        const Matrix tt = identity(n) + t * op;
        const Vector lhs = tt * (br + t * br_n);
        const Vector rhs = g.bracket(tt * u, tt * v);
        if (!(lhs == rhs)) return VerificationReport::fail(name, {i, j}, lhs - rhs, "sample t = " + t.str());
      }
    }
  return VerificationReport::pass(name);
}

}  // namespace homlie
