#pragma once

#include "homlie/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace homlie::test {

inline std::string data_path(const std::string& file) { return std::string(HOMLIE_DATA_DIR) + "/" + file; }

inline HomLieAlgebra fixture(const std::string& name) { return io::algebra_from_json(io::read_file(data_path(name + ".json"))); }

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "S3", "H3", "H3q"};
  return names;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (long x : row) m(r, c++) = Rational(x);
    ++r;
  }
  return m;
}

inline Vector vec(std::initializer_list<Rational> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Matrix diag(std::initializer_list<Rational> xs) {
  const Vector d = vec(xs);
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return m;
}

// Small rationals, mostly integers, with a fixed seed per caller.
class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  Rational entry(long bound = 3) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 3), coin(0, 3);
    return coin(gen_) == 0 ? Rational(num(gen_), den(gen_)) : Rational(num(gen_));
  }

  Matrix matrix(Index rows, Index cols, long bound = 3) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = entry(bound);
    return m;
  }

  Vector vector(Index n) { return matrix(n, 1).col(0); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool flip() { return integer(0, 1) == 1; }

 private:
  std::mt19937 gen_;
};

}  // namespace homlie::test
