#include "homlie/cohomology.hpp"

namespace homlie {

namespace {

void check_rep(const HomLieAlgebra& g, const Representation& rep) {
  if (rep.algebra_dim() != g.dim()) throw Error(Errc::DimensionMismatch, "representation belongs to another algebra");
}

void check_degree(Index k) {
  if (k < 0) throw Error(Errc::DegreeOutOfRange, "negative degree " + std::to_string(k));
}

}  // namespace

std::vector<Cochain> HomCochainSpace::basis() const {
  std::vector<Cochain> out;
  for (const auto& v : space.basis_vectors()) out.emplace_back(algebra_dim, degree, module_dim, v);
  return out;
}

HomCochainSpace hom_cochain_space(const HomLieAlgebra& g, const Representation& rep, Index k) {
  check_rep(g, rep);
  check_degree(k);
  const Index n = g.dim();
  const Index m = rep.module_dim();
  const Index full = cochain_space_dim(n, k, m);
  // f -> A∘f - f∘alpha on full coordinates.
  Matrix constraint = -pullback_matrix(g.alpha(), k, m);
  for (Index t = 0; t < binomial(n, k); ++t) constraint.block(t * m, t * m, m, m) += rep.A();
  return {k, n, m, full == 0 ? Subspace::zero(0) : kernel(constraint)};
}

bool is_hom_cochain(const HomLieAlgebra& g, const Representation& rep, const Cochain& f) {
  check_rep(g, rep);
  if (f.algebra_dim() != g.dim() || f.module_dim() != rep.module_dim())
    throw Error(Errc::DimensionMismatch, "cochain does not match the algebra and module");
  return f.pushforward(rep.A()) == f.pullback(g.alpha());
}

Cochain coboundary_unchecked(const HomLieAlgebra& g, const Representation& rep, const Cochain& f) {
  check_rep(g, rep);
  if (f.algebra_dim() != g.dim() || f.module_dim() != rep.module_dim())
    throw Error(Errc::DimensionMismatch, "cochain does not match the algebra and module");
  const Index n = g.dim();
  const Index k = f.degree();
  const Index m = rep.module_dim();
  Cochain out(n, k + 1, m);
  if (k + 1 > n || f.is_zero()) return out;

  const Matrix alpha_k = alpha_power(g, static_cast<int>(k));
  std::vector<Matrix> action;  // rho(alpha^k e_j)
  for (Index j = 0; j < n; ++j) action.push_back(rep.act(alpha_k.col(j)));

  std::vector<Vector> args(static_cast<std::size_t>(k));
  for (const auto& tuple : increasing_tuples(n, k + 1)) {
    Vector value = Vector::Zero(m);
    for (Index i = 0; i <= k; ++i) {
      Tuple rest;
      for (Index p = 0; p <= k; ++p)
        if (p != i) rest.push_back(tuple[static_cast<std::size_t>(p)]);
      const Vector fv = f.value(rest);
      if (is_zero(fv)) continue;
      const Vector term = action[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])] * fv;
      if (i % 2 == 0)
        value += term;
      else
        value -= term;
    }
    for (Index i = 0; i <= k; ++i)
      for (Index j = i + 1; j <= k; ++j) {
        const Vector br = g.bracket_basis(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(j)]);
        if (is_zero(br)) continue;
        std::size_t slot = 0;
        args[slot++] = br;
        for (Index p = 0; p <= k; ++p)
          if (p != i && p != j) args[slot++] = g.alpha().col(tuple[static_cast<std::size_t>(p)]);
        const Vector term = f.evaluate(args);
        if ((i + j) % 2 == 0)
          value += term;
        else
          value -= term;
      }
    out.set_value(tuple, value);
  }
  return out;
}

Cochain coboundary_apply(const HomLieAlgebra& g, const Representation& rep, const Cochain& f) {
  if (!is_hom_cochain(g, rep, f))
    throw Error(Errc::NotHomCochain, "A∘f differs from f∘alpha for the degree-" + std::to_string(f.degree()) + " cochain");
  return coboundary_unchecked(g, rep, f);
}

Matrix full_coboundary_matrix(const HomLieAlgebra& g, const Representation& rep, Index k) {
  check_rep(g, rep);
  check_degree(k);
  const Index n = g.dim();
  const Index m = rep.module_dim();
  const Index cols = cochain_space_dim(n, k, m);
  Matrix d(cochain_space_dim(n, k + 1, m), cols);
  for (Index c = 0; c < cols; ++c) d.col(c) = coboundary_unchecked(g, rep, Cochain(n, k, m, unit_vector(cols, c))).coords();
  return d;
}

Matrix coboundary_matrix(const HomLieAlgebra& g, const Representation& rep, Index k) {
  const HomCochainSpace space = hom_cochain_space(g, rep, k);
  const auto basis = space.basis();
  Matrix d(cochain_space_dim(g.dim(), k + 1, rep.module_dim()), static_cast<Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) d.col(static_cast<Index>(c)) = coboundary_unchecked(g, rep, basis[c]).coords();
  return d;
}

CohomologyResult cohomology(const HomLieAlgebra& g, const Representation& rep, Index k) {
  check_rep(g, rep);
  check_degree(k);
  const Index n = g.dim();
  const Index m = rep.module_dim();
  const Index full = cochain_space_dim(n, k, m);
  CohomologyResult result;
  result.degree = k;
  if (full == 0) {
    result.cocycles = Subspace::zero(0);
    result.coboundaries = Subspace::zero(0);
    return result;
  }
  const HomCochainSpace space = hom_cochain_space(g, rep, k);
  const Matrix d = coboundary_matrix(g, rep, k);
  const Subspace closed_coeffs = kernel(d);
  result.cocycles = Subspace::from_rows(closed_coeffs.basis() * space.space.basis());
  result.coboundaries = k == 0 ? Subspace::zero(full) : Subspace::from_columns(coboundary_matrix(g, rep, k - 1));
  result.dim_Z = result.cocycles.dim();
  result.dim_B = result.coboundaries.dim();
  result.dim_H = quotient_dim(result.cocycles, result.coboundaries);
  for (const auto& v : complement_basis(result.cocycles, result.coboundaries)) result.representatives.emplace_back(n, k, m, v);
  return result;
}

VerificationReport d_squared_is_zero(const HomLieAlgebra& g, const Representation& rep, Index max_degree) {
  check_rep(g, rep);
  const Index n = g.dim();
  const Index m = rep.module_dim();
  for (Index k = 0; k <= max_degree; ++k) {
    if (cochain_space_dim(n, k + 2, m) == 0) break;
    const Matrix once = coboundary_matrix(g, rep, k);
    const Matrix twice = full_coboundary_matrix(g, rep, k + 1) * once;
    for (Index c = 0; c < twice.cols(); ++c) {
      if (is_zero(twice.col(c))) continue;
      // Report the first output tuple carrying a nonzero value.
      const auto& tuples = increasing_tuples(n, k + 2);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const Vector value = twice.col(c).segment(static_cast<Index>(t) * m, m);
        if (!is_zero(value))
          return VerificationReport::fail("d^2 = 0", tuples[t], value, "degree " + std::to_string(k) + " basis cochain " + std::to_string(c));
      }
    }
  }
  return VerificationReport::pass("d^2 = 0");
}

}  // namespace homlie
