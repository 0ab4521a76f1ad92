#include "support.hpp"

#include "homlie/cohomology.hpp"
#include "homlie/deformation.hpp"

#include <doctest.h>

using namespace homlie;
using test::diag;
using test::fixture;
using test::mat;

namespace {

Cochain g_valued(Index n, Index i, Index j, const Vector& v) {
  Cochain c(n, 2, n);
  const Index ij[] = {i, j};
  c.set_value(ij, v);
  return c;
}

bool verifies(const HomLieAlgebra& h) { return verify_hom_jacobi(h).holds && is_multiplicative(h).holds; }

}  // namespace

TEST_CASE("trivial and bracket deformations") {
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    CHECK(generates_deformation(g, Cochain(g.dim(), 2, g.dim())).holds);
    CHECK(generates_deformation(g, bracket_cochain(g)).holds);
    CHECK(deformed_bracket_at(g, bracket_cochain(g), Rational(0)) == g);
  }
}

TEST_CASE("dimension two has no closedness obstruction") {
  // both conditions are sums over triples i < j < k, vacuous in dim 2
  CHECK(generates_deformation(fixture("A2"), g_valued(2, 0, 1, unit_vector(2, 0))).holds);
}

TEST_CASE("non-closed omega is rejected") {
  const auto g = fixture("S3");
  const auto report = generates_deformation(g, g_valued(3, 0, 1, unit_vector(3, 0)));
  REQUIRE_FALSE(report.holds);
  CHECK(report.counterexample->indices == std::vector<Index>{0, 1, 2});
  CHECK(report.counterexample->context.find("closed") != std::string::npos);
}

TEST_CASE("deformation preconditions") {
  const auto a3 = fixture("A3");
  try {
    (void)generates_deformation(a3, g_valued(2, 0, 1, unit_vector(2, 0)));
    FAIL("expected NotHomCochain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHomCochain);
  }
  const auto singular = fixture("H3").with_alpha(diag({1, 0, 0}));
  try {
    (void)generates_deformation(singular, Cochain(3, 2, 3));
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRegular);
  }
}

TEST_CASE("Nijenhuis brackets on A2") {
  const auto a2 = fixture("A2");
  const Matrix n = diag({1, 0});
  const auto datum = nijenhuis_bracket(a2, n);
  CHECK(datum.omega.value(std::vector<Index>{0, 1}) == unit_vector(2, 1));
  CHECK(datum.closed);
  CHECK(datum.omega_hom_jacobi);
  CHECK(nijenhuis_bracket(a2, mat({{0, 0}, {1, 0}})).omega.is_zero());

  const auto t1 = deformed_bracket_at(a2, datum.omega, Rational(1));
  CHECK(t1.bracket_basis(0, 1) == test::vec({0, 2}));
  CHECK(verifies(t1));

  CHECK(is_hom_nijenhuis(a2, n).holds);
  CHECK(generates_deformation(a2, datum.omega).holds);
  CHECK(check_trivializes(a2, n).holds);
}

TEST_CASE("scalar operators") {
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    for (const Rational lambda : {Rational(0), Rational(2), Rational(-1, 3)}) {
      const Matrix n = lambda * identity(g.dim());
      CHECK(nijenhuis_bracket(g, n).omega == lambda * bracket_cochain(g));
      CHECK(is_hom_nijenhuis(g, n).holds);
      CHECK(check_trivializes(g, n).holds);
    }
  }
}

TEST_CASE("Nijenhuis preconditions") {
  const auto a3 = fixture("A3");
  try {
    (void)nijenhuis_bracket(a3, mat({{0, 1}, {0, 0}}));
    FAIL("expected NotCommutingWithAlpha");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCommutingWithAlpha);
  }
  const auto s3 = fixture("S3");
  const Matrix n = diag({1, 0, 0});
  const auto report = is_hom_nijenhuis(s3, n);
  if (!report.holds) {
    try {
      (void)check_trivializes(s3, n);
      FAIL("expected NotNijenhuis");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotNijenhuis);
    }
  }
}

TEST_CASE("Nijenhuis bracket is the ad_{-1} coboundary of N") {
  test::Random rnd(53);
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    const auto ad = adjoint_representation(g, -1);
    const auto c1 = hom_cochain_space(g, ad, 1);
    for (int trial = 0; trial < 5; ++trial) {
      Cochain f(g.dim(), 1, g.dim());
      for (const auto& b : c1.basis()) f = f + rnd.entry() * b;
      CHECK(nijenhuis_bracket(g, f.as_operator()).omega == coboundary_apply(g, ad, f));
    }
  }
}

TEST_CASE("Nijenhuis operators generate trivial deformations") {
  test::Random rnd(59);
  int found = 0;
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    const auto c1 = hom_cochain_space(g, adjoint_representation(g, -1), 1);
    for (int trial = 0; trial < 30; ++trial) {
      Cochain f(g.dim(), 1, g.dim());
      for (const auto& b : c1.basis())
        if (rnd.flip()) f = f + Rational(rnd.integer(-1, 1)) * b;
      const Matrix n = f.as_operator();
      if (!is_hom_nijenhuis(g, n).holds) continue;
      ++found;
      const auto omega = nijenhuis_bracket(g, n).omega;
      CHECK(generates_deformation(g, omega).holds);
      CHECK(check_trivializes(g, n).holds);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("deformation validity matches sampled verifiers") {
  test::Random rnd(61);
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    const auto c2 = hom_cochain_space(g, adjoint_representation(g, -1), 2);
    for (int trial = 0; trial < 10; ++trial) {
      Cochain omega(g.dim(), 2, g.dim());
      for (const auto& b : c2.basis())
        if (rnd.flip()) omega = omega + rnd.entry() * b;
      bool sampled = true;
      for (const Rational t : {Rational(1), Rational(-1), Rational(2)})
        sampled = sampled && verify_hom_jacobi(deformed_bracket_at(g, omega, t)).holds;
      CHECK(generates_deformation(g, omega).holds == sampled);
    }
  }
}
