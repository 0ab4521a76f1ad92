#include "homlie/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace homlie {

HomLieAlgebra::HomLieAlgebra(Index dim, const std::vector<BracketEntry>& brackets, Matrix alpha,
                             std::vector<std::string> labels)
    : dim_(dim), alpha_(std::move(alpha)), labels_(std::move(labels)) {
  if (dim < 0) throw Error(Errc::DimensionMismatch, "negative dimension");
  if (alpha_.rows() != dim || alpha_.cols() != dim)
    throw Error(Errc::DimensionMismatch, "alpha must be " + std::to_string(dim) + "x" + std::to_string(dim));
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != dim)
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(dim) + " basis labels");
  table_.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), Vector::Zero(dim));
  for (const auto& entry : brackets) {
    if (entry.i < 0 || entry.j < 0 || entry.i >= dim || entry.j >= dim)
      throw Error(Errc::DimensionMismatch, "bracket index out of range");
    if (entry.coeffs.size() != dim)
      throw Error(Errc::DimensionMismatch, "bracket coefficient vector must have length " + std::to_string(dim));
    if (entry.i == entry.j) {
      if (!is_zero(entry.coeffs))
        throw Error(Errc::DimensionMismatch, "[e_i, e_i] must vanish (i = " + std::to_string(entry.i) + ")");
      continue;
    }
    if (entry.i < entry.j)
      table_[static_cast<std::size_t>(pair_index(entry.i, entry.j))] += entry.coeffs;
    else
      table_[static_cast<std::size_t>(pair_index(entry.j, entry.i))] -= entry.coeffs;
  }
}

HomLieAlgebra HomLieAlgebra::abelian(Index dim) { return HomLieAlgebra(dim, {}, identity(dim)); }

void HomLieAlgebra::check_vector(const Vector& x) const {
  if (x.size() != dim_)
    throw Error(Errc::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) + " in algebra of dimension " + std::to_string(dim_));
}

Vector HomLieAlgebra::bracket_basis(Index i, Index j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw Error(Errc::DimensionMismatch, "basis index out of range");
  if (i == j) return Vector::Zero(dim_);
  if (i < j) return table_[static_cast<std::size_t>(pair_index(i, j))];
  return -table_[static_cast<std::size_t>(pair_index(j, i))];
}

Vector HomLieAlgebra::bracket(const Vector& x, const Vector& y) const {
  check_vector(x);
  check_vector(y);
  Vector out = Vector::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = i + 1; j < dim_; ++j) {
      const Rational c = x(i) * y(j) - x(j) * y(i);
      if (c.is_zero()) continue;
      const Vector& e = table_[static_cast<std::size_t>(pair_index(i, j))];
      out += c * e;
    }
  }
  return out;
}

Matrix HomLieAlgebra::ad(const Vector& x) const {
  check_vector(x);
  Matrix m(dim_, dim_);
  for (Index j = 0; j < dim_; ++j) m.col(j) = bracket(x, unit_vector(dim_, j));
  return m;
}

std::vector<BracketEntry> HomLieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = i + 1; j < dim_; ++j) {
      const Vector& e = table_[static_cast<std::size_t>(pair_index(i, j))];
      if (!is_zero(e)) out.push_back({i, j, e});
    }
  return out;
}

HomLieAlgebra HomLieAlgebra::with_alpha(Matrix alpha) const {
  if (alpha.rows() != dim_ || alpha.cols() != dim_) throw Error(Errc::DimensionMismatch, "alpha has wrong shape");
  HomLieAlgebra copy = *this;
  copy.alpha_ = std::move(alpha);
  return copy;
}

bool operator==(const HomLieAlgebra& a, const HomLieAlgebra& b) {
  return a.dim_ == b.dim_ && a.alpha_ == b.alpha_ && a.table_ == b.table_;
}

LinearMap::LinearMap(Index source_dim, Index target_dim, Matrix matrix)
    : source_dim_(source_dim), target_dim_(target_dim), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_dim_ || matrix_.cols() != source_dim_)
    throw Error(Errc::DimensionMismatch, "linear map matrix must be target_dim x source_dim");
}

VerificationReport verify_hom_jacobi(const HomLieAlgebra& g) {
  const Index n = g.dim();
  const Matrix& a = g.alpha();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        const Vector defect = g.bracket(a.col(i), g.bracket_basis(j, k)) +
                              g.bracket(a.col(j), g.bracket_basis(k, i)) +
                              g.bracket(a.col(k), g.bracket_basis(i, j));
        if (!is_zero(defect)) return VerificationReport::fail("hom-Jacobi", {i, j, k}, defect);
      }
  return VerificationReport::pass("hom-Jacobi");
}

VerificationReport is_multiplicative(const HomLieAlgebra& g) {
  const Index n = g.dim();
  const Matrix& a = g.alpha();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const Vector defect = a * g.bracket_basis(i, j) - g.bracket(a.col(i), a.col(j));
      if (!is_zero(defect)) return VerificationReport::fail("multiplicative", {i, j}, defect);
    }
  return VerificationReport::pass("multiplicative");
}

bool alpha_invertible(const HomLieAlgebra& g) { return rank(g.alpha()) == g.dim(); }

bool is_regular(const HomLieAlgebra& g) { return is_multiplicative(g).holds && alpha_invertible(g); }

Matrix alpha_power(const HomLieAlgebra& g, int s) {
  Matrix base = g.alpha();
  if (s < 0) {
    try {
      base = inverse(g.alpha());
    } catch (const Error&) {
      throw Error(Errc::NotRegular, "alpha^" + std::to_string(s) + " needs an invertible alpha");
    }
  }
  Matrix out = identity(g.dim());
  for (int e = 0; e < (s < 0 ? -s : s); ++e) out = out * base;
  return out;
}

HomLieAlgebra direct_sum(const HomLieAlgebra& g, const HomLieAlgebra& k) {
  const Index n = g.dim();
  const Index m = k.dim();
  std::vector<BracketEntry> entries;
  for (const auto& e : g.brackets()) {
    Vector c = Vector::Zero(n + m);
    c.head(n) = e.coeffs;
    entries.push_back({e.i, e.j, c});
  }
  for (const auto& e : k.brackets()) {
    Vector c = Vector::Zero(n + m);
    c.tail(m) = e.coeffs;
    entries.push_back({n + e.i, n + e.j, c});
  }
  Matrix alpha = Matrix::Zero(n + m, n + m);
  alpha.topLeftCorner(n, n) = g.alpha();
  alpha.bottomRightCorner(m, m) = k.alpha();
  std::vector<std::string> labels;
  if (!g.labels().empty() && !k.labels().empty()) {
    labels = g.labels();
    labels.insert(labels.end(), k.labels().begin(), k.labels().end());
  }
  return HomLieAlgebra(n + m, entries, alpha, labels);
}

VerificationReport morphism_report(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi) {
  if (phi.source_dim() != g.dim() || phi.target_dim() != k.dim())
    throw Error(Errc::DimensionMismatch, "map shape does not match the algebras");
  const Matrix& p = phi.matrix();
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = i + 1; j < g.dim(); ++j) {
      const Vector defect = p * g.bracket_basis(i, j) - k.bracket(p.col(i), p.col(j));
      if (!is_zero(defect)) return VerificationReport::fail("morphism", {i, j}, defect, "bracket");
    }
  const Matrix twist = p * g.alpha() - k.alpha() * p;
  for (Index j = 0; j < g.dim(); ++j)
    if (!is_zero(twist.col(j))) return VerificationReport::fail("morphism", {j}, twist.col(j), "twist");
  return VerificationReport::pass("morphism");
}

bool is_morphism(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi) {
  return morphism_report(g, k, phi).holds;
}

bool graph_is_subalgebra(const HomLieAlgebra& g, const HomLieAlgebra& k, const LinearMap& phi) {
  if (phi.source_dim() != g.dim() || phi.target_dim() != k.dim())
    throw Error(Errc::DimensionMismatch, "map shape does not match the algebras");
  const HomLieAlgebra sum = direct_sum(g, k);
  std::vector<Vector> graph;
  for (Index i = 0; i < g.dim(); ++i) {
    Vector v(g.dim() + k.dim());
    v << unit_vector(g.dim(), i), phi.matrix().col(i);
    graph.push_back(std::move(v));
  }
  return is_subalgebra(sum, graph);
}

bool is_subalgebra(const HomLieAlgebra& g, const std::vector<Vector>& h_basis) {
  const Subspace h = Subspace::span(g.dim(), h_basis);
  for (const auto& v : h_basis)
    if (!h.contains(g.alpha() * v)) return false;
  for (std::size_t a = 0; a < h_basis.size(); ++a)
    for (std::size_t b = a + 1; b < h_basis.size(); ++b)
      if (!h.contains(g.bracket(h_basis[a], h_basis[b]))) return false;
  return true;
}

HomLieAlgebra relabel(const HomLieAlgebra& g, std::span<const Index> perm) {
  const Index n = g.dim();
  if (static_cast<Index>(perm.size()) != n) throw Error(Errc::DimensionMismatch, "permutation has wrong length");
  // Columns of p are the old coordinates of the new basis vectors.
  Matrix p = Matrix::Zero(n, n);
  for (Index q = 0; q < n; ++q) p(perm[static_cast<std::size_t>(q)], q) = 1;
  const Matrix p_inv = p.transpose();
  if (!(p_inv * p == identity(n))) throw Error(Errc::DimensionMismatch, "not a permutation");
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      Vector c = p_inv * g.bracket(p.col(a), p.col(b));
      if (!is_zero(c)) entries.push_back({a, b, std::move(c)});
    }
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Index q = 0; q < n; ++q) labels.push_back(g.labels()[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])]);
  return HomLieAlgebra(n, entries, p_inv * g.alpha() * p, labels);
}

bool equal_up_to_relabeling(const HomLieAlgebra& a, const HomLieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  std::vector<Index> perm(static_cast<std::size_t>(a.dim()));
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Subspace center(const HomLieAlgebra& g) {
  const Index n = g.dim();
  // u is central iff [e_j, u] = 0 for every j.
  Matrix stacked(n * n, n);
  for (Index j = 0; j < n; ++j) stacked.middleRows(j * n, n) = g.ad(unit_vector(n, j));
  return kernel(stacked);
}

}  // namespace homlie
