#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace homlie;
using test::diag;
using test::fixture;
using test::mat;
using test::vec;

namespace {

HomLieAlgebra so3(Matrix alpha) {
  return HomLieAlgebra(3, {{0, 1, vec({0, 0, 1})}, {1, 2, vec({1, 0, 0})}, {0, 2, vec({0, -1, 0})}}, std::move(alpha));
}

}  // namespace

TEST_CASE("bracket lookups") {
  const auto a2 = fixture("A2");
  const auto s3 = fixture("S3");
  CHECK(a2.bracket(unit_vector(2, 0), unit_vector(2, 1)) == unit_vector(2, 1));
  CHECK(a2.bracket(unit_vector(2, 1), unit_vector(2, 0)) == vec({0, -1}));
  CHECK(s3.bracket(unit_vector(3, 1), unit_vector(3, 2)) == unit_vector(3, 0));
  CHECK(bracket(s3, unit_vector(3, 0), unit_vector(3, 2)) == vec({0, 0, -2}));
  CHECK_THROWS_AS(s3.bracket(unit_vector(2, 0), unit_vector(3, 0)), Error);
}

TEST_CASE("bracket is skew on random vectors") {
  test::Random rnd(3);
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = rnd.vector(g.dim()), y = rnd.vector(g.dim());
      CHECK(g.bracket(x, y) == Vector(-g.bracket(y, x)));
      CHECK(is_zero(g.bracket(x, x)));
    }
  }
}

TEST_CASE("constructor normalizes reversed pairs") {
  const HomLieAlgebra g(2, {{1, 0, vec({0, -1})}}, identity(2));
  CHECK(g == fixture("A2"));
  CHECK_THROWS_AS(HomLieAlgebra(2, {{1, 1, vec({1, 0})}}, identity(2)), Error);
  CHECK_THROWS_AS(HomLieAlgebra(2, {}, identity(3)), Error);
}

TEST_CASE("corpus verifies") {
  for (const auto& name : test::corpus()) {
    CAPTURE(name);
    const auto g = fixture(name);
    CHECK(verify_hom_jacobi(g).holds);
    CHECK(is_multiplicative(g).holds);
    CHECK(is_regular(g));
  }
}

TEST_CASE("hom-Jacobi failure carries a counterexample") {
  const auto bad = fixture("S3").with_alpha(diag({1, 1, 2}));
  const auto report = verify_hom_jacobi(bad);
  REQUIRE_FALSE(report.holds);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->indices == std::vector<Index>{0, 1, 2});
  CHECK(report.counterexample->defect == vec({-2, 0, 0}));
}

TEST_CASE("multiplicativity") {
  CHECK(is_multiplicative(fixture("A3")).holds);
  const auto report = is_multiplicative(so3(diag({1, 1, 2})));
  REQUIRE_FALSE(report.holds);
  CHECK(report.counterexample->indices == std::vector<Index>{0, 1});
  CHECK(is_multiplicative(so3(identity(3))).holds);
  CHECK(verify_hom_jacobi(so3(identity(3))).holds);
}

TEST_CASE("regularity") {
  CHECK(is_regular(fixture("A3")));
  CHECK(is_regular(fixture("A1")));
  const auto singular = fixture("H3").with_alpha(diag({1, 0, 0}));
  CHECK(is_multiplicative(singular).holds);
  CHECK_FALSE(is_regular(singular));
}

TEST_CASE("alpha powers") {
  const auto a3 = fixture("A3");
  CHECK(alpha_power(a3, 0) == identity(2));
  CHECK(alpha_power(a3, -1) == diag({1, Rational(1, 2)}));
  CHECK(alpha_power(a3, 2) == diag({1, 4}));
  try {
    (void)alpha_power(fixture("A1").with_alpha(diag({1, 0})), -1);
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRegular);
  }
}

TEST_CASE("direct sums") {
  const auto a1a1 = direct_sum(fixture("A1"), fixture("A1"));
  CHECK(a1a1 == HomLieAlgebra::abelian(4));

  const auto a2a2 = direct_sum(fixture("A2"), fixture("A2"));
  CHECK(a2a2.dim() == 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 2; j < 4; ++j) CHECK(is_zero(a2a2.bracket_basis(i, j)));
  CHECK(a2a2.bracket_basis(2, 3) == unit_vector(4, 3));
  CHECK(verify_hom_jacobi(a2a2).holds);

  const auto mixed = direct_sum(fixture("A3"), fixture("H3q"));
  CHECK(mixed.dim() == 5);
  CHECK(is_multiplicative(mixed).holds);
  CHECK(verify_hom_jacobi(mixed).holds);
}

TEST_CASE("morphisms") {
  const auto a2 = fixture("A2");
  CHECK(is_morphism(a2, a2, LinearMap(identity(2))));
  CHECK(is_morphism(a2, a2, LinearMap(Matrix(Matrix::Zero(2, 2)))));
  CHECK(is_morphism(a2, a2, LinearMap(diag({1, 2}))));
  const LinearMap swap(mat({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_morphism(a2, a2, swap));
  CHECK_FALSE(graph_is_subalgebra(a2, a2, swap));
  CHECK(graph_is_subalgebra(a2, a2, LinearMap(identity(2))));
  CHECK_THROWS_AS((void)is_morphism(a2, fixture("S3"), LinearMap(identity(2))), Error);
}

TEST_CASE("morphism and graph agree on random maps") {
  test::Random rnd(5);
  const auto a2 = fixture("A2");
  const auto a3 = fixture("A3");
  int agreeing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Lower-triangular maps with a zero corner hit morphisms often.
    Matrix m = rnd.matrix(2, 2);
    if (trial % 2 == 0) m(0, 1) = Rational(0);
    if (trial % 4 == 0) m(1, 0) = Rational(0), m(0, 0) = Rational(1);
    const LinearMap phi(m);
    CHECK(is_morphism(a2, a2, phi) == graph_is_subalgebra(a2, a2, phi));
    CHECK(is_morphism(a3, a2, phi) == graph_is_subalgebra(a3, a2, phi));
    agreeing += is_morphism(a2, a2, phi);
  }
  CHECK(agreeing > 0);
}

TEST_CASE("subalgebras") {
  const auto s3 = fixture("S3");
  CHECK(is_subalgebra(s3, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(is_subalgebra(s3, {unit_vector(3, 1)}));
  CHECK_FALSE(is_subalgebra(s3, {unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(is_subalgebra(s3, {unit_vector(3, 0), unit_vector(3, 1)}));
  // alpha-invariance matters too
  const auto a3 = fixture("A3").with_alpha(mat({{1, 0}, {1, 2}}));
  CHECK_FALSE(is_subalgebra(a3, {unit_vector(2, 0)}));
}

TEST_CASE("relabeling") {
  const auto s3 = fixture("S3");
  std::vector<Index> perm{2, 0, 1};
  const auto r = relabel(s3, perm);
  CHECK(verify_hom_jacobi(r).holds);
  CHECK_FALSE(r == s3);
  CHECK(equal_up_to_relabeling(r, s3));
  CHECK_FALSE(equal_up_to_relabeling(fixture("H3"), s3));

  const auto bad = s3.with_alpha(diag({1, 1, 2}));
  do {
    CHECK(verify_hom_jacobi(relabel(bad, perm)).holds == false);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("center") {
  CHECK(center(fixture("H3")) == Subspace::span(3, {unit_vector(3, 2)}));
  CHECK(center(fixture("S3")).dim() == 0);
  CHECK(center(fixture("A1")).dim() == 2);
}
