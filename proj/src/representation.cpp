#include "homlie/representation.hpp"

#include "homlie/cohomology.hpp"

namespace homlie {

namespace {

void check_shapes(const HomLieAlgebra& g, const RepresentationData& data) {
  const Index m = data.module_dim;
  if (static_cast<Index>(data.rho.size()) != g.dim())
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(g.dim()) + " action matrices, got " +
                                             std::to_string(data.rho.size()));
  for (const auto& r : data.rho)
    if (r.rows() != m || r.cols() != m) throw Error(Errc::DimensionMismatch, "action matrices must be m x m");
  if (data.A.rows() != m || data.A.cols() != m) throw Error(Errc::DimensionMismatch, "A must be m x m");
}

Matrix act_on(const RepresentationData& data, const Vector& x) {
  Matrix out = Matrix::Zero(data.module_dim, data.module_dim);
  for (Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) out += x(i) * data.rho[static_cast<std::size_t>(i)];
  return out;
}

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Index j = 0; j < m.cols(); ++j) v.segment(j * m.rows(), m.rows()) = m.col(j);
  return v;
}

void require_multiplicative(const HomLieAlgebra& g) {
  if (!is_multiplicative(g).holds) throw Error(Errc::NotMultiplicative, "alpha does not preserve the bracket");
}

void require_scalar_cochain(const HomLieAlgebra& g, const Cochain& f, Index degree, const char* name) {
  if (f.algebra_dim() != g.dim() || f.module_dim() != 1 || f.degree() != degree)
    throw Error(Errc::DimensionMismatch, std::string(name) + " must be a scalar " + std::to_string(degree) +
                                             "-cochain on a " + std::to_string(g.dim()) + "-dimensional algebra");
  if (!(f.pullback(g.alpha()) == f))
    throw Error(Errc::NotHomCochain, std::string(name) + " does not satisfy f∘alpha = f");
}

}  // namespace

VerificationReport is_representation(const HomLieAlgebra& g, const RepresentationData& data) {
  check_shapes(g, data);
  const Index n = g.dim();
  const Matrix& a = data.A;
  for (Index i = 0; i < n; ++i) {
    const Matrix defect = act_on(data, g.alpha().col(i)) * a - a * data.rho[static_cast<std::size_t>(i)];
    if (!is_zero(defect)) return VerificationReport::fail("representation", {i}, flatten(defect), "rho(alpha u) A = A rho(u)");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Matrix defect = act_on(data, g.bracket_basis(i, j)) * a -
                            act_on(data, g.alpha().col(i)) * data.rho[static_cast<std::size_t>(j)] +
                            act_on(data, g.alpha().col(j)) * data.rho[static_cast<std::size_t>(i)];
      if (!is_zero(defect))
        return VerificationReport::fail("representation", {i, j}, flatten(defect),
                                        "rho([u,v]) A = rho(alpha u) rho(v) - rho(alpha v) rho(u)");
    }
  return VerificationReport::pass("representation");
}

Representation::Representation(const HomLieAlgebra& g, RepresentationData data) : data_(std::move(data)) {
  const auto report = is_representation(g, data_);
  if (!report.holds) {
    std::string where;
    for (Index i : report.counterexample->indices) where += (where.empty() ? "" : ",") + std::to_string(i);
    throw Error(Errc::InvalidRepresentation, "axiom fails (" + report.counterexample->context + ") at (" + where + ")");
  }
}

Matrix Representation::act(const Vector& x) const {
  if (x.size() != algebra_dim()) throw Error(Errc::DimensionMismatch, "element has wrong length");
  return act_on(data_, x);
}

Representation trivial_representation(const HomLieAlgebra& g) {
  require_multiplicative(g);
  RepresentationData data{1, std::vector<Matrix>(static_cast<std::size_t>(g.dim()), Matrix::Zero(1, 1)),
                          Matrix::Identity(1, 1)};
  return Representation(g, std::move(data));
}

Representation adjoint_representation(const HomLieAlgebra& g, int s) {
  require_multiplicative(g);
  const Matrix shift = alpha_power(g, s);
  RepresentationData data{g.dim(), {}, g.alpha()};
  for (Index i = 0; i < g.dim(); ++i) data.rho.push_back(g.ad(shift.col(i)));
  return Representation(g, std::move(data));
}

HomLieAlgebra semidirect_product(const HomLieAlgebra& g, const Representation& rep) {
  if (rep.algebra_dim() != g.dim()) throw Error(Errc::DimensionMismatch, "representation belongs to another algebra");
  return semidirect_product_unchecked(g, rep.data());
}

HomLieAlgebra semidirect_product_unchecked(const HomLieAlgebra& g, const RepresentationData& data) {
  check_shapes(g, data);
  const Index n = g.dim();
  const Index m = data.module_dim;
  std::vector<BracketEntry> entries;
  for (const auto& e : g.brackets()) {
    Vector c = Vector::Zero(n + m);
    c.head(n) = e.coeffs;
    entries.push_back({e.i, e.j, std::move(c)});
  }
  // [(e_i, 0), (0, f_a)] = (0, rho(e_i) f_a)
  for (Index i = 0; i < n; ++i)
    for (Index a = 0; a < m; ++a) {
      Vector c = Vector::Zero(n + m);
      c.tail(m) = data.rho[static_cast<std::size_t>(i)].col(a);
      if (!is_zero(c)) entries.push_back({i, n + a, std::move(c)});
    }
  Matrix twist = Matrix::Zero(n + m, n + m);
  twist.topLeftCorner(n, n) = g.alpha();
  twist.bottomRightCorner(m, m) = data.A;
  return HomLieAlgebra(n + m, entries, twist);
}

HomLieAlgebra central_extension(const HomLieAlgebra& g, const Cochain& theta) {
  require_scalar_cochain(g, theta, 2, "theta");
  const Index n = g.dim();
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector c(n + 1);
      const Index ij[] = {i, j};
      c << g.bracket_basis(i, j), theta.value(ij)(0);
      if (!is_zero(c)) entries.push_back({i, j, std::move(c)});
    }
  Matrix twist = Matrix::Zero(n + 1, n + 1);
  twist.topLeftCorner(n, n) = g.alpha();
  twist(n, n) = 1;
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels = g.labels();
    labels.push_back("c");
  }
  return HomLieAlgebra(n + 1, entries, twist, labels);
}

CentralExtensionIsomorphism central_extension_isomorphism(const HomLieAlgebra& g, const Cochain& theta1,
                                                          const Cochain& theta2, const Cochain& f) {
  require_scalar_cochain(g, theta1, 2, "theta1");
  require_scalar_cochain(g, theta2, 2, "theta2");
  require_scalar_cochain(g, f, 1, "f");
  const Representation trivial = trivial_representation(g);
  if (!(theta1 - theta2 == coboundary_apply(g, trivial, f)))
    throw Error(Errc::NotCoboundary, "theta1 - theta2 differs from d_T f");

  const Index n = g.dim();
  Matrix m = identity(n + 1);
  for (Index j = 0; j < n; ++j) m(n, j) = f.coords()(j);
  LinearMap map(std::move(m));

  const HomLieAlgebra h1 = central_extension(g, theta1);
  const HomLieAlgebra h2 = central_extension(g, theta2);
  VerificationReport report = morphism_report(h1, h2, map);
  if (report.holds && rank(map.matrix()) != n + 1)
    report = VerificationReport::fail("morphism", {}, Vector::Zero(n + 1), "map is not invertible");
  report.property = "central extension isomorphism";
  return {std::move(map), std::move(report)};
}

}  // namespace homlie
