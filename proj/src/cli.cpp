#include "homlie/cli.hpp"

#include "homlie/cohomology.hpp"
#include "homlie/deformation.hpp"
#include "homlie/derivations.hpp"
#include "homlie/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace homlie::cli {

namespace {

using io::Json;

std::string format(const Vector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v(i).str();
  return s + ")";
}

std::string format(const Matrix& m) {
  std::string s = "[";
  for (Index r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (Index c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + m(r, c).str();
    s += "]";
  }
  return s + "]";
}

std::string describe(const VerificationReport& report) {
  if (report.holds) return "holds";
  const auto& c = *report.counterexample;
  std::string where;
  for (Index i : c.indices) where += (where.empty() ? "" : ",") + std::to_string(i);
  std::string s = "fails at (" + where + "), defect " + format(c.defect);
  if (!c.context.empty()) s += " [" + c.context + "]";
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Context {
  std::ostream& out;
  bool structured = false;

  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

Representation load_rep(const HomLieAlgebra& g, const std::string& spec) {
  if (spec == "trivial") return trivial_representation(g);
  if (spec.rfind("adjoint:", 0) == 0) {
    const std::string power = spec.substr(8);
    std::size_t used = 0;
    int s = 0;
    try {
      s = std::stoi(power, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (power.empty() || used != power.size()) throw Error(Errc::ParseError, "bad adjoint power in --rep " + spec);
    return adjoint_representation(g, s);
  }
  return Representation(g, io::representation_from_json(io::read_file(spec), g.dim()));
}

// Construction verbs print the algebra in the input schema when structured,
// so the output feeds straight back into `verify`.
int report_construction(const Context& ctx, const std::string& what, const HomLieAlgebra& h) {
  const auto jacobi = verify_hom_jacobi(h);
  const auto mult = is_multiplicative(h);
  const bool ok = jacobi.holds && mult.holds;
  if (ctx.structured) {
    ctx.emit(io::to_json(h));
  } else {
    ctx.out << what << ": dim " << h.dim() << "\n";
    ctx.out << "hom-Jacobi: " << describe(jacobi) << "; multiplicative: " << describe(mult) << "\n";
    ctx.out << io::to_json(h).dump(2) << "\n";
  }
  return ok ? kHolds : kPropertyFails;
}

int cmd_verify(const Context& ctx, const std::string& file, const std::vector<std::string>& require) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const auto jacobi = verify_hom_jacobi(g);
  const auto mult = is_multiplicative(g);
  const bool regular = mult.holds && alpha_invertible(g);
  bool ok = jacobi.holds;
  for (const auto& r : require) {
    if (r == "multiplicative") ok = ok && mult.holds;
    if (r == "regular") ok = ok && regular;
  }
  if (ctx.structured) {
    ctx.emit(Json{{"hom_jacobi", io::to_json(jacobi)}, {"multiplicative", io::to_json(mult)}, {"regular", regular}});
  } else {
    ctx.out << "hom-Jacobi: " << describe(jacobi) << "; multiplicative: " << describe(mult)
            << "; regular: " << (regular ? "true" : "false") << "\n";
  }
  return ok ? kHolds : kPropertyFails;
}

int cmd_derivations(const Context& ctx, const std::string& file, int grade, bool inner) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const auto space = inner ? inner_derivation_space(g, grade) : derivation_space(g, grade);
  if (ctx.structured) {
    ctx.emit(io::to_json(space));
  } else {
    ctx.out << (inner ? "Inn" : "Der") << "_{alpha^" << grade << "}: dim " << space.dim() << "\n";
    for (const auto& op : space.operators()) ctx.out << "  " << format(op) << "\n";
  }
  return kHolds;
}

int cmd_cohomology(const Context& ctx, const std::string& file, const std::string& rep_spec, int degree) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Representation rep = load_rep(g, rep_spec);
  const auto result = cohomology(g, rep, degree);
  if (ctx.structured) {
    ctx.emit(io::to_json(result));
  } else {
    ctx.out << "H^" << degree << ": dims Z=" << result.dim_Z << " B=" << result.dim_B << " H=" << result.dim_H << "\n";
    for (const auto& f : result.representatives) ctx.out << "  " << io::to_json(f).dump() << "\n";
  }
  return kHolds;
}

int cmd_d_squared(const Context& ctx, const std::string& file, const std::string& rep_spec, int max_degree) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Representation rep = load_rep(g, rep_spec);
  const auto report = d_squared_is_zero(g, rep, max_degree);
  if (ctx.structured)
    ctx.emit(io::to_json(report));
  else
    ctx.out << "d^2 = 0: " << describe(report) << "\n";
  return report.holds ? kHolds : kPropertyFails;
}

int cmd_semidirect(const Context& ctx, const std::string& file, const std::string& rep_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Representation rep(g, io::representation_from_json(io::read_file(rep_file), g.dim()));
  return report_construction(ctx, "semidirect product", semidirect_product(g, rep));
}

int cmd_central_extend(const Context& ctx, const std::string& file, const std::string& theta_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Cochain theta = io::cochain_from_json(io::read_file(theta_file), g.dim());
  return report_construction(ctx, "central extension", central_extension(g, theta));
}

int cmd_iso_check(const Context& ctx, const std::string& file, const std::string& t1, const std::string& t2,
                  const std::string& f_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Cochain theta1 = io::cochain_from_json(io::read_file(t1), g.dim());
  const Cochain theta2 = io::cochain_from_json(io::read_file(t2), g.dim());
  const Cochain f = io::cochain_from_json(io::read_file(f_file), g.dim());
  const auto iso = central_extension_isomorphism(g, theta1, theta2, f);
  if (ctx.structured) {
    ctx.emit(Json{{"map", io::to_json(iso.map)}, {"report", io::to_json(iso.report)}});
  } else {
    ctx.out << "isomorphism: " << describe(iso.report) << "\n";
    ctx.out << "  f_h = " << format(iso.map.matrix()) << "\n";
  }
  return iso.report.holds ? kHolds : kPropertyFails;
}

int cmd_derivation_extend(const Context& ctx, const std::string& file, const std::string& op_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Matrix op = io::operator_from_json(io::read_file(op_file));
  return report_construction(ctx, "derivation extension", derivation_extension(g, op));
}

int cmd_direct_sum(const Context& ctx, const std::string& a, const std::string& b) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(a));
  const HomLieAlgebra k = io::algebra_from_json(io::read_file(b));
  return report_construction(ctx, "direct sum", direct_sum(g, k));
}

int cmd_morphism_check(const Context& ctx, const std::string& a, const std::string& b, const std::string& map_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(a));
  const HomLieAlgebra k = io::algebra_from_json(io::read_file(b));
  const LinearMap phi = io::linear_map_from_json(io::read_file(map_file));
  const auto report = morphism_report(g, k, phi);
  const bool graph = graph_is_subalgebra(g, k, phi);
  if (ctx.structured)
    ctx.emit(Json{{"morphism", io::to_json(report)}, {"graph_is_subalgebra", graph}});
  else
    ctx.out << "morphism: " << describe(report) << "; graph subalgebra: " << yes_no(graph) << "\n";
  return report.holds ? kHolds : kPropertyFails;
}

int cmd_nijenhuis(const Context& ctx, const std::string& file, const std::string& op_file) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Matrix op = io::operator_from_json(io::read_file(op_file));
  const auto nij = is_hom_nijenhuis(g, op);
  const auto datum = nijenhuis_bracket(g, op);
  std::optional<VerificationReport> deformation;
  if (is_regular(g)) deformation = generates_deformation(g, datum.omega);
  std::optional<VerificationReport> trivial;
  if (nij.holds) trivial = check_trivializes(g, op);

  if (ctx.structured) {
    Json j{{"hom_nijenhuis", io::to_json(nij)}, {"omega", io::to_json(datum.omega)}};
    j["deformation"] = deformation ? io::to_json(*deformation) : Json(nullptr);
    j["trivializes"] = trivial ? io::to_json(*trivial) : Json(nullptr);
    ctx.emit(j);
  } else {
    ctx.out << "hom-Nijenhuis: " << yes_no(nij.holds);
    ctx.out << "; deformation: " << (!deformation ? "n/a (not regular)" : deformation->holds ? "valid" : "invalid");
    ctx.out << "; trivializes: " << (!trivial ? "n/a" : yes_no(trivial->holds)) << "\n";
    if (!nij.holds) ctx.out << "  hom-Nijenhuis " << describe(nij) << "\n";
    if (deformation && !deformation->holds) ctx.out << "  deformation " << describe(*deformation) << "\n";
    ctx.out << "  omega = " << io::to_json(datum.omega).dump() << "\n";
  }
  const bool ok = nij.holds && (!deformation || deformation->holds) && (!trivial || trivial->holds);
  return ok ? kHolds : kPropertyFails;
}

int cmd_deform(const Context& ctx, const std::string& file, const std::string& omega_file,
               const std::vector<std::string>& t_values) {
  const HomLieAlgebra g = io::algebra_from_json(io::read_file(file));
  const Cochain omega = io::cochain_from_json(io::read_file(omega_file), g.dim());
  const auto report = generates_deformation(g, omega);
  Json samples = Json::array();
  bool samples_ok = true;
  std::ostringstream text;
  for (const auto& s : t_values) {
    const Rational t = Rational::parse(s);
    const HomLieAlgebra h = deformed_bracket_at(g, omega, t);
    const auto jacobi = verify_hom_jacobi(h);
    const auto mult = is_multiplicative(h);
    samples_ok = samples_ok && jacobi.holds && mult.holds;
    samples.push_back({{"t", t.str()}, {"hom_jacobi", io::to_json(jacobi)}, {"multiplicative", io::to_json(mult)}});
    text << "  t = " << t.str() << ": hom-Jacobi " << describe(jacobi) << "; multiplicative " << describe(mult) << "\n";
  }
  if (ctx.structured)
    ctx.emit(Json{{"deformation", io::to_json(report)}, {"samples", samples}});
  else
    ctx.out << "deformation: " << (report.holds ? "valid" : "invalid, " + describe(report)) << "\n" << text.str();
  return report.holds && samples_ok ? kHolds : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for finite-dimensional hom-Lie algebras", "homlie"};
  app.require_subcommand(1);
  bool structured = false;
  app.add_flag("--json", structured, "Structured (JSON) output");

  std::function<int(const Context&)> action;
  std::string algebra, second, rep, theta, theta1, theta2, f_file, op_file, map_file, omega_file;
  int grade = 0, degree = 0, max_degree = 0;
  std::vector<std::string> require;
  std::vector<std::string> t_values{"1", "-1", "2"};

  auto* verify = app.add_subcommand("verify", "Check hom-Jacobi, multiplicativity and regularity");
  verify->add_option("algebra", algebra)->required();
  verify->add_option("--require", require, "Also fail unless these hold")
      ->check(CLI::IsMember({"multiplicative", "regular"}))
      ->delimiter(',');
  verify->callback([&] { action = [&](const Context& c) { return cmd_verify(c, algebra, require); }; });

  auto* der = app.add_subcommand("derivations", "Basis of the alpha^K-derivations");
  der->add_option("algebra", algebra)->required();
  der->add_option("--grade", grade)->required();
  der->callback([&] { action = [&](const Context& c) { return cmd_derivations(c, algebra, grade, false); }; });

  auto* inn = app.add_subcommand("inner-derivations", "Basis of the inner alpha^K-derivations");
  inn->add_option("algebra", algebra)->required();
  inn->add_option("--grade", grade)->required();
  inn->callback([&] { action = [&](const Context& c) { return cmd_derivations(c, algebra, grade, true); }; });

  auto* coh = app.add_subcommand("cohomology", "Dimensions and representatives of H^K");
  coh->add_option("algebra", algebra)->required();
  coh->add_option("--rep", rep, "trivial | adjoint:S | representation file")->required();
  coh->add_option("--degree", degree)->required();
  coh->callback([&] { action = [&](const Context& c) { return cmd_cohomology(c, algebra, rep, degree); }; });

  auto* dsq = app.add_subcommand("d-squared", "Check d∘d = 0 up to a degree");
  dsq->add_option("algebra", algebra)->required();
  dsq->add_option("--rep", rep, "trivial | adjoint:S | representation file")->required();
  dsq->add_option("--max-degree", max_degree)->required();
  dsq->callback([&] { action = [&](const Context& c) { return cmd_d_squared(c, algebra, rep, max_degree); }; });

  auto* semi = app.add_subcommand("semidirect", "Semidirect product with a representation");
  semi->add_option("algebra", algebra)->required();
  semi->add_option("--rep", rep, "representation file")->required();
  semi->callback([&] { action = [&](const Context& c) { return cmd_semidirect(c, algebra, rep); }; });

  auto* cext = app.add_subcommand("central-extend", "Central extension by a scalar 2-cochain");
  cext->add_option("algebra", algebra)->required();
  cext->add_option("--theta", theta)->required();
  cext->callback([&] { action = [&](const Context& c) { return cmd_central_extend(c, algebra, theta); }; });

  auto* iso = app.add_subcommand("iso-check", "Isomorphism of central extensions with cohomologous cocycles");
  iso->add_option("algebra", algebra)->required();
  iso->add_option("--theta1", theta1)->required();
  iso->add_option("--theta2", theta2)->required();
  iso->add_option("--f", f_file)->required();
  iso->callback([&] { action = [&](const Context& c) { return cmd_iso_check(c, algebra, theta1, theta2, f_file); }; });

  auto* dext = app.add_subcommand("derivation-extend", "Extension g ⊕ Q·D by an operator");
  dext->add_option("algebra", algebra)->required();
  dext->add_option("--op", op_file)->required();
  dext->callback([&] { action = [&](const Context& c) { return cmd_derivation_extend(c, algebra, op_file); }; });

  auto* dsum = app.add_subcommand("direct-sum", "Direct sum of two algebras");
  dsum->add_option("first", algebra)->required();
  dsum->add_option("second", second)->required();
  dsum->callback([&] { action = [&](const Context& c) { return cmd_direct_sum(c, algebra, second); }; });

  auto* morph = app.add_subcommand("morphism-check", "Morphism test and graph-subalgebra test");
  morph->add_option("source", algebra)->required();
  morph->add_option("target", second)->required();
  morph->add_option("--map", map_file)->required();
  morph->callback([&] { action = [&](const Context& c) { return cmd_morphism_check(c, algebra, second, map_file); }; });

  auto* nij = app.add_subcommand("nijenhuis", "Hom-Nijenhuis test, deformation and triviality");
  nij->add_option("algebra", algebra)->required();
  nij->add_option("--op", op_file)->required();
  nij->callback([&] { action = [&](const Context& c) { return cmd_nijenhuis(c, algebra, op_file); }; });

  auto* def = app.add_subcommand("deform", "Check that omega generates a deformation");
  def->add_option("algebra", algebra)->required();
  def->add_option("--omega", omega_file)->required();
  def->add_option("--t", t_values, "Comma-separated sample parameters")->delimiter(',');
  def->callback([&] { action = [&](const Context& c) { return cmd_deform(c, algebra, omega_file, t_values); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kInputError;
  }

  try {
    return action(Context{out, structured});
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace homlie::cli
