#include "homlie/derivations.hpp"

namespace homlie {

namespace {

void require_multiplicative(const HomLieAlgebra& g) {
  if (const auto report = is_multiplicative(g); !report.holds)
    throw Error(Errc::NotMultiplicative, "alpha does not preserve the bracket");
}

void require_operator(const HomLieAlgebra& g, const Matrix& op) {
  if (op.rows() != g.dim() || op.cols() != g.dim())
    throw Error(Errc::DimensionMismatch, "operator must be " + std::to_string(g.dim()) + "x" + std::to_string(g.dim()));
}

// Residual of both derivation conditions, stacked: first n^2 entries for
// D alpha - alpha D, then n entries per pair i < j for the Leibniz rule.
Vector derivation_residual(const HomLieAlgebra& g, const Matrix& alpha_k, const Matrix& op) {
  const Index n = g.dim();
  const Index pairs = n * (n - 1) / 2;
  Vector out(n * n + n * pairs);
  out.head(n * n) = vectorize(op * g.alpha() - g.alpha() * op);
  Index row = n * n;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      out.segment(row, n) = op * g.bracket_basis(i, j) - g.bracket(op.col(i), alpha_k.col(j)) -
                            g.bracket(alpha_k.col(i), op.col(j));
      row += n;
    }
  return out;
}

}  // namespace

Vector vectorize(const Matrix& op) {
  Vector v(op.size());
  for (Index j = 0; j < op.cols(); ++j) v.segment(j * op.rows(), op.rows()) = op.col(j);
  return v;
}

Matrix unvectorize(const Vector& coords, Index n) {
  if (coords.size() != n * n) throw Error(Errc::DimensionMismatch, "operator coordinates must have length n^2");
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) m.col(j) = coords.segment(j * n, n);
  return m;
}

std::vector<Matrix> GradedDerivationSpace::operators() const {
  std::vector<Matrix> out;
  for (const auto& v : space.basis_vectors()) out.push_back(unvectorize(v, algebra_dim));
  return out;
}

GradedDerivationSpace derivation_space(const HomLieAlgebra& g, int k) {
  require_multiplicative(g);
  const Matrix alpha_k = alpha_power(g, k);
  const Index n = g.dim();
  const Index unknowns = n * n;
  Matrix system(n * n + n * (n * (n - 1) / 2), unknowns);
  for (Index c = 0; c < unknowns; ++c)
    system.col(c) = derivation_residual(g, alpha_k, unvectorize(unit_vector(unknowns, c), n));
  return {k, n, kernel(system)};
}

GradedDerivationSpace inner_derivation_space(const HomLieAlgebra& g, int k) {
  require_multiplicative(g);
  if (k <= 0 && !alpha_invertible(g))
    throw Error(Errc::NotRegular, "inner alpha^" + std::to_string(k) + "-derivations need alpha^-1");
  const Index n = g.dim();
  const Matrix shift = alpha_power(g, k - 1);
  std::vector<Vector> generators;
  for (const auto& u : fixed_space(g.alpha()).basis_vectors()) {
    Matrix op(n, n);
    for (Index j = 0; j < n; ++j) op.col(j) = g.bracket(shift.col(j), u);
    generators.push_back(vectorize(op));
  }
  return {k, n, Subspace::span(n * n, generators)};
}

VerificationReport is_derivation(const HomLieAlgebra& g, int k, const Matrix& op) {
  require_multiplicative(g);
  require_operator(g, op);
  const Matrix alpha_k = alpha_power(g, k);
  const Index n = g.dim();
  const std::string name = "alpha^" + std::to_string(k) + "-derivation";
  const Matrix twist = op * g.alpha() - g.alpha() * op;
  for (Index j = 0; j < n; ++j)
    if (!is_zero(twist.col(j))) return VerificationReport::fail(name, {j}, twist.col(j), "D alpha - alpha D");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Vector defect = op * g.bracket_basis(i, j) - g.bracket(op.col(i), alpha_k.col(j)) -
                            g.bracket(alpha_k.col(i), op.col(j));
      if (!is_zero(defect)) return VerificationReport::fail(name, {i, j}, defect, "Leibniz rule");
    }
  return VerificationReport::pass(name);
}

Matrix commutator(const Matrix& d, const Matrix& dp) {
  if (d.rows() != d.cols() || dp.rows() != dp.cols() || d.rows() != dp.rows())
    throw Error(Errc::DimensionMismatch, "commutator needs square operators of equal size");
  return d * dp - dp * d;
}

HomLieAlgebra derivation_extension(const HomLieAlgebra& g, const Matrix& op) {
  require_operator(g, op);
  const Index n = g.dim();
  std::vector<BracketEntry> entries;
  for (const auto& e : g.brackets()) {
    Vector c = Vector::Zero(n + 1);
    c.head(n) = e.coeffs;
    entries.push_back({e.i, e.j, std::move(c)});
  }
  for (Index u = 0; u < n; ++u) {
    // [e_u, D] = -D(e_u)
    Vector c = Vector::Zero(n + 1);
    c.head(n) = -op.col(u);
    entries.push_back({u, n, std::move(c)});
  }
  Matrix alpha = Matrix::Zero(n + 1, n + 1);
  alpha.topLeftCorner(n, n) = g.alpha();
  alpha(n, n) = 1;
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels = g.labels();
    labels.push_back("D");
  }
  return HomLieAlgebra(n + 1, entries, alpha, labels);
}

}  // namespace homlie
