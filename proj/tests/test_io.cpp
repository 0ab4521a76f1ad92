#include "support.hpp"

#include <doctest.h>

#include <functional>

using namespace homlie;
using test::fixture;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("fixtures load") {
  const auto s3 = fixture("S3");
  CHECK(s3.dim() == 3);
  CHECK(s3.labels() == std::vector<std::string>{"h", "e", "f"});
  CHECK(fixture("H3q").alpha() == test::diag({3, 1, 3}));
}

TEST_CASE("algebra round trip") {
  for (const auto& name : test::corpus()) {
    const auto g = fixture(name);
    const auto text = io::to_json(g).dump();
    CHECK(io::algebra_from_json(io::parse(text)) == g);
  }
}

TEST_CASE("syntax errors carry a position") {
  const auto msg = message_of([] { io::parse("{\"dim\": 2,\n \"alpha\": [}", "bad.json"); });
  CHECK(msg.find("bad.json") != std::string::npos);
  CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("field errors name the field") {
  auto load = [](const char* text) { return [text] { (void)io::algebra_from_json(io::parse(text)); }; };
  CHECK(code_of(load(R"({"alpha": [["1"]]})")) == Errc::ParseError);
  CHECK(message_of(load(R"({"alpha": [["1"]]})")).find("dim") != std::string::npos);
  const char* reversed = R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": ["0","1"]}], "alpha": [["1","0"],["0","1"]]})";
  CHECK(message_of(load(reversed)).find("brackets[0]") != std::string::npos);
  const char* bad_entry = R"({"dim": 2, "alpha": [["1","0"],["0","x"]]})";
  CHECK(message_of(load(bad_entry)).find("alpha[1][1]") != std::string::npos);
  const char* zero_den = R"({"dim": 1, "alpha": [["1/0"]]})";
  CHECK(code_of(load(zero_den)) == Errc::ParseError);
  const char* short_row = R"({"dim": 2, "alpha": [["1","0"],["0"]]})";
  CHECK(message_of(load(short_row)).find("alpha[1]") != std::string::npos);
}

TEST_CASE("representation round trip") {
  const auto g = fixture("S3");
  const auto rep = adjoint_representation(g, 0);
  const auto back = io::representation_from_json(io::parse(io::to_json(rep.data()).dump()), 3);
  CHECK(back.rho == rep.rho());
  CHECK(back.A == rep.A());
  const auto file = io::representation_from_json(io::read_file(test::data_path("rep_A2_ad0.json")), 2);
  CHECK(file.rho == adjoint_representation(fixture("A2"), 0).rho());
}

TEST_CASE("cochain formats") {
  const auto theta = io::cochain_from_json(io::read_file(test::data_path("theta_e1e2.json")), 2);
  CHECK(theta.degree() == 2);
  CHECK(theta.module_dim() == 1);
  CHECK(theta.value(std::vector<Index>{0, 1}) == Vector::Constant(1, Rational(1)));

  test::Random rnd(71);
  for (Index k = 0; k <= 3; ++k) {
    const Cochain f(3, k, 2, rnd.vector(cochain_space_dim(3, k, 2)));
    CHECK(io::cochain_from_json(io::parse(io::to_json(f).dump()), 3) == f);
  }
  const char* unsorted = R"({"degree": 2, "module_dim": 1, "values": [{"indices": [1, 0], "coeffs": ["1"]}]})";
  CHECK(code_of([&] { (void)io::cochain_from_json(io::parse(unsorted), 2); }) == Errc::ParseError);
}

TEST_CASE("operator and map formats") {
  const Matrix n = io::operator_from_json(io::read_file(test::data_path("N_diag10.json")));
  CHECK(n == test::diag({1, 0}));
  CHECK(io::operator_from_json(io::operator_to_json(n)) == n);
  const LinearMap swap = io::linear_map_from_json(io::read_file(test::data_path("swap2.json")));
  CHECK(swap.matrix() == test::mat({{0, 1}, {1, 0}}));
  const LinearMap rect(2, 3, test::mat({{1, 0}, {0, 1}, {1, 1}}));
  const LinearMap back = io::linear_map_from_json(io::to_json(rect));
  CHECK(back.source_dim() == 2);
  CHECK(back.target_dim() == 3);
  CHECK(back.matrix() == rect.matrix());
}

TEST_CASE("reports serialize") {
  const auto report = verify_hom_jacobi(fixture("S3").with_alpha(test::diag({1, 1, 2})));
  const auto j = io::to_json(report);
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["defect"] == io::Json::array({"-2", "0", "0"}));
  CHECK(io::to_json(verify_hom_jacobi(fixture("A1"))).contains("counterexample") == false);
}
