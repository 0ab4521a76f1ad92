#include "support.hpp"

#include <doctest.h>

using namespace homlie;
using test::mat;

TEST_CASE("kernel") {
  CHECK(kernel(Matrix(Matrix::Zero(2, 2))).dim() == 2);
  CHECK(kernel(identity(2)).dim() == 0);
  const Subspace k = kernel(mat({{1, 1}, {0, 0}}));
  REQUIRE(k.dim() == 1);
  CHECK(k == Subspace::span(2, {test::vec({1, -1})}));
}

TEST_CASE("rank") {
  CHECK(rank(identity(3)) == 3);
  CHECK(rank(Matrix(Matrix::Zero(3, 3))) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("inverse") {
  CHECK(inverse(test::diag({1, 2})) == test::diag({1, Rational(1, 2)}));
  CHECK(inverse(identity(3)) == identity(3));
  try {
    (void)inverse(mat({{1, 1}, {1, 1}}));
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Singular);
  }
}

TEST_CASE("fixed space") {
  CHECK(fixed_space(identity(2)).dim() == 2);
  const Subspace f = fixed_space(test::diag({1, 2}));
  CHECK(f == Subspace::span(2, {unit_vector(2, 0)}));
  CHECK(fixed_space(test::diag({2, 3})).dim() == 0);
}

TEST_CASE("quotient dim") {
  const Subspace z = Subspace::full(3);
  const Subspace b = Subspace::span(3, {unit_vector(3, 1)});
  CHECK(quotient_dim(z, b) == 2);
  CHECK(quotient_dim(z, z) == 0);
  try {
    (void)quotient_dim(b, z);
    FAIL("expected NotContained");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotContained);
  }
}

TEST_CASE("subspace canonical form is structural") {
  const Subspace a = Subspace::span(3, {test::vec({1, 2, 3}), test::vec({0, 1, 1})});
  const Subspace b = Subspace::span(3, {test::vec({1, 3, 4}), test::vec({2, 4, 6}), test::vec({1, 1, 2})});
  CHECK(a == b);
  CHECK(a.contains(test::vec({1, 3, 4})));
  CHECK_FALSE(a.contains(unit_vector(3, 0)));
  CHECK(intersect(a, Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)})).dim() == 1);
  CHECK(subspace_sum(a, Subspace::span(3, {unit_vector(3, 0)})).dim() == 3);
}

TEST_CASE("rank-nullity and inverse on random matrices") {
  test::Random rnd(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = rnd.integer(1, 5), c = rnd.integer(1, 5);
    Matrix m = rnd.matrix(r, c);
    if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * Rational(2);
    const Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    CHECK(rank(m) == rank(Matrix(m.transpose())));
    for (const auto& v : k.basis_vectors()) CHECK(is_zero(m * v));
    if (r == c) {
      const bool invertible = rank(m) == r;
      CHECK(invertible == !determinant(m).is_zero());
      if (invertible) {
        CHECK(inverse(m) * m == identity(r));
      } else {
        CHECK_THROWS_AS((void)inverse(m), Error);
      }
    }
  }
}

TEST_CASE("complement representatives are independent modulo B") {
  const Subspace z = Subspace::full(4);
  const Subspace b = Subspace::span(4, {test::vec({1, 1, 0, 0}), test::vec({0, 0, 1, 1})});
  const auto reps = complement_basis(z, b);
  REQUIRE(reps.size() == 2);
  Subspace acc = b;
  for (const auto& v : reps) acc = subspace_sum(acc, Subspace::span(4, {v}));
  CHECK(acc == z);
}
