#include "homlie/cochain.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace homlie {

namespace {

void enumerate(Index n, Index k, Index start, Tuple& current, std::vector<Tuple>& out) {
  if (static_cast<Index>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (Index i = start; i < n; ++i) {
    current.push_back(i);
    enumerate(n, k, i + 1, current, out);
    current.pop_back();
  }
}

// Determinant of the k x k minor with the given rows and columns.
Rational minor(const Matrix& m, std::span<const Index> rows, std::span<const Index> cols) {
  const Index k = static_cast<Index>(rows.size());
  Matrix sub(k, k);
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c) sub(r, c) = m(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
  return determinant(sub);
}

}  // namespace

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  Index out = 1;
  for (Index i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

const std::vector<Tuple>& increasing_tuples(Index n, Index k) {
  static std::mutex mutex;
  static std::map<std::pair<Index, Index>, std::vector<Tuple>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, k});
  if (inserted && k >= 0) {
    Tuple current;
    enumerate(n, k, 0, current, it->second);
  }
  return it->second;
}

Index tuple_rank(Index n, std::span<const Index> tuple) {
  // Lexicographic rank among strictly increasing k-subsets of {0..n-1}.
  const Index k = static_cast<Index>(tuple.size());
  Index rank = 0;
  Index prev = -1;
  for (Index pos = 0; pos < k; ++pos) {
    const Index value = tuple[static_cast<std::size_t>(pos)];
    for (Index skipped = prev + 1; skipped < value; ++skipped) rank += binomial(n - skipped - 1, k - pos - 1);
    prev = value;
  }
  return rank;
}

Cochain::Cochain(Index algebra_dim, Index degree, Index module_dim)
    : Cochain(algebra_dim, degree, module_dim, Vector::Zero(cochain_space_dim(algebra_dim, degree, module_dim))) {}

Cochain::Cochain(Index algebra_dim, Index degree, Index module_dim, Vector coords)
    : n_(algebra_dim), k_(degree), m_(module_dim), coords_(std::move(coords)) {
  if (degree < 0) throw Error(Errc::DegreeOutOfRange, "negative cochain degree");
  if (coords_.size() != cochain_space_dim(n_, k_, m_))
    throw Error(Errc::DimensionMismatch, "cochain coordinate vector has length " + std::to_string(coords_.size()) +
                                             ", expected " + std::to_string(cochain_space_dim(n_, k_, m_)));
}

Cochain Cochain::from_operator(const Matrix& op) {
  if (op.rows() != op.cols()) throw Error(Errc::DimensionMismatch, "operator must be square");
  const Index n = op.rows();
  Cochain f(n, 1, n);
  for (Index j = 0; j < n; ++j) f.coords_.segment(j * n, n) = op.col(j);
  return f;
}

Cochain Cochain::scalar(Index algebra_dim, Index degree) { return Cochain(algebra_dim, degree, 1); }

Vector Cochain::value(std::span<const Index> tuple) const {
  if (static_cast<Index>(tuple.size()) != k_) throw Error(Errc::DimensionMismatch, "tuple length differs from degree");
  Tuple sorted(tuple.begin(), tuple.end());
  for (Index i : sorted)
    if (i < 0 || i >= n_) throw Error(Errc::DimensionMismatch, "basis index out of range");
  // Insertion sort, counting transpositions for the sign.
  bool odd = false;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      odd = !odd;
    }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Vector::Zero(m_);
  Vector v = coords_.segment(tuple_rank(n_, sorted) * m_, m_);
  return odd ? Vector(-v) : v;
}

void Cochain::set_value(std::span<const Index> tuple, const Vector& v) {
  if (static_cast<Index>(tuple.size()) != k_ || v.size() != m_)
    throw Error(Errc::DimensionMismatch, "tuple or value has the wrong size");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= n_ || (i > 0 && tuple[i - 1] >= tuple[i]))
      throw Error(Errc::DimensionMismatch, "set_value needs a strictly increasing tuple of basis indices");
  }
  coords_.segment(tuple_rank(n_, tuple) * m_, m_) = v;
}

Vector Cochain::evaluate(std::span<const Vector> args) const {
  if (static_cast<Index>(args.size()) != k_) throw Error(Errc::DimensionMismatch, "wrong number of arguments");
  Matrix x(n_, k_);
  for (Index c = 0; c < k_; ++c) {
    if (args[static_cast<std::size_t>(c)].size() != n_) throw Error(Errc::DimensionMismatch, "argument has wrong length");
    x.col(c) = args[static_cast<std::size_t>(c)];
  }
  Tuple all_cols(static_cast<std::size_t>(k_));
  for (Index c = 0; c < k_; ++c) all_cols[static_cast<std::size_t>(c)] = c;
  Vector out = Vector::Zero(m_);
  const auto& tuples = increasing_tuples(n_, k_);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto block = coords_.segment(static_cast<Index>(t) * m_, m_);
    if (homlie::is_zero(block)) continue;
    const Rational det = minor(x, tuples[t], all_cols);
    if (det.is_zero()) continue;
    out += det * block;
  }
  return out;
}

Matrix Cochain::as_operator() const {
  if (k_ != 1) throw Error(Errc::DimensionMismatch, "only degree-1 cochains are operators");
  Matrix op(m_, n_);
  for (Index j = 0; j < n_; ++j) op.col(j) = coords_.segment(j * m_, m_);
  return op;
}

Cochain Cochain::pullback(const Matrix& alpha) const {
  if (alpha.rows() != n_ || alpha.cols() != n_) throw Error(Errc::DimensionMismatch, "alpha has wrong shape");
  return Cochain(n_, k_, m_, pullback_matrix(alpha, k_, m_) * coords_);
}

Cochain Cochain::pushforward(const Matrix& a) const {
  if (a.rows() != m_ || a.cols() != m_) throw Error(Errc::DimensionMismatch, "module map has wrong shape");
  Vector out(coords_.size());
  for (Index t = 0; t < binomial(n_, k_); ++t) out.segment(t * m_, m_) = a * coords_.segment(t * m_, m_);
  return Cochain(n_, k_, m_, std::move(out));
}

void Cochain::check_same_shape(const Cochain& other) const {
  if (n_ != other.n_ || k_ != other.k_ || m_ != other.m_)
    throw Error(Errc::DimensionMismatch, "cochains of different shape");
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  a.check_same_shape(b);
  return Cochain(a.n_, a.k_, a.m_, a.coords_ + b.coords_);
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  a.check_same_shape(b);
  return Cochain(a.n_, a.k_, a.m_, a.coords_ - b.coords_);
}

Cochain operator*(const Rational& s, const Cochain& a) { return Cochain(a.n_, a.k_, a.m_, s * a.coords_); }

Matrix pullback_matrix(const Matrix& alpha, Index k, Index m) {
  const Index n = alpha.rows();
  const auto& tuples = increasing_tuples(n, k);
  const Index count = static_cast<Index>(tuples.size());
  Matrix p = Matrix::Zero(count * m, count * m);
  // (f∘alpha)(e_J) = sum_I det(alpha[I, J]) f(e_I)
  for (Index jt = 0; jt < count; ++jt)
    for (Index it = 0; it < count; ++it) {
      const Rational det = minor(alpha, tuples[static_cast<std::size_t>(it)], tuples[static_cast<std::size_t>(jt)]);
      if (det.is_zero()) continue;
      for (Index a = 0; a < m; ++a) p(jt * m + a, it * m + a) = det;
    }
  return p;
}

}  // namespace homlie
