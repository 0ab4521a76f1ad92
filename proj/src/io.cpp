#include "homlie/io.hpp"

#include <fstream>
#include <sstream>

namespace homlie::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(Errc::ParseError, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string path(const std::string& parent, const char* key) { return parent.empty() ? key : parent + "." + key; }
std::string path(const std::string& parent, std::size_t i) { return parent + "[" + std::to_string(i) + "]"; }

Index count_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(field, "expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

Index index_from_json(const Json& j, Index bound, const std::string& field) {
  const Index i = count_from_json(j, field);
  if (i >= bound) fail(field, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
  return i;
}

const Json& array_of(const Json& j, std::optional<Index> size, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  if (size && static_cast<Index>(j.size()) != *size)
    fail(field, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  return j;
}

Tuple tuple_from_json(const Json& j, Index degree, Index n, const std::string& field) {
  array_of(j, degree, field);
  Tuple t;
  for (std::size_t p = 0; p < j.size(); ++p) {
    t.push_back(index_from_json(j[p], n, path(field, p)));
    if (p > 0 && t[p - 1] >= t[p]) fail(field, "indices must be strictly increasing");
  }
  return t;
}

}  // namespace

Json parse(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, std::string(source) + ": " + e.what());
  }
}

Json read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::ParseError, "cannot open " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), file.string());
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(field, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

Json to_json(const Rational& x) { return x.str(); }

Vector vector_from_json(const Json& j, Index size, const std::string& field) {
  array_of(j, size, field);
  Vector v(size);
  for (Index i = 0; i < size; ++i) v(i) = rational_from_json(j[static_cast<std::size_t>(i)], path(field, static_cast<std::size_t>(i)));
  return v;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Matrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& field) {
  array_of(j, rows, field);
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) m.row(r) = vector_from_json(j[static_cast<std::size_t>(r)], cols, path(field, static_cast<std::size_t>(r))).transpose();
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vector(m.row(r).transpose())));
  return out;
}

HomLieAlgebra algebra_from_json(const Json& j) {
  const Index n = count_from_json(member(j, "dim", ""), "dim");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const Json& basis = array_of(j["basis"], n, "basis");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].is_string()) fail(path("basis", i), "expected a string");
      labels.push_back(basis[i].get<std::string>());
    }
  }
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const Json& brackets = array_of(j["brackets"], std::nullopt, "brackets");
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      const std::string field = path("brackets", b);
      const Index i = index_from_json(member(brackets[b], "i", field), n, path(field, "i"));
      const Index k = index_from_json(member(brackets[b], "j", field), n, path(field, "j"));
      if (i >= k) fail(field, "requires i < j");
      entries.push_back({i, k, vector_from_json(member(brackets[b], "coeffs", field), n, path(field, "coeffs"))});
    }
  }
  const Matrix alpha = matrix_from_json(member(j, "alpha", ""), n, n, "alpha");
  return HomLieAlgebra(n, entries, alpha, labels);
}

Json to_json(const HomLieAlgebra& g) {
  Json out;
  out["dim"] = g.dim();
  if (!g.labels().empty()) out["basis"] = g.labels();
  Json brackets = Json::array();
  for (const auto& e : g.brackets()) brackets.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", to_json(e.coeffs)}});
  out["brackets"] = std::move(brackets);
  out["alpha"] = to_json(g.alpha());
  return out;
}

RepresentationData representation_from_json(const Json& j, Index algebra_dim) {
  RepresentationData data;
  data.module_dim = count_from_json(member(j, "module_dim", ""), "module_dim");
  const Json& rho = array_of(member(j, "rho", ""), algebra_dim, "rho");
  for (std::size_t i = 0; i < rho.size(); ++i)
    data.rho.push_back(matrix_from_json(rho[i], data.module_dim, data.module_dim, path("rho", i)));
  data.A = matrix_from_json(member(j, "A", ""), data.module_dim, data.module_dim, "A");
  return data;
}

Json to_json(const RepresentationData& data) {
  Json out;
  out["module_dim"] = data.module_dim;
  Json rho = Json::array();
  for (const auto& r : data.rho) rho.push_back(to_json(r));
  out["rho"] = std::move(rho);
  out["A"] = to_json(data.A);
  return out;
}

Cochain cochain_from_json(const Json& j, Index algebra_dim) {
  const Index k = count_from_json(member(j, "degree", ""), "degree");
  const Json& values = array_of(member(j, "values", ""), std::nullopt, "values");
  const bool scalar_form = !j.contains("module_dim");
  const Index m = scalar_form ? 1 : count_from_json(j["module_dim"], "module_dim");
  Cochain f(algebra_dim, k, m);
  for (std::size_t v = 0; v < values.size(); ++v) {
    const std::string field = path("values", v);
    if (!values[v].is_object()) fail(field, "expected an object");
    Tuple tuple;
    Vector value;
    if (values[v].contains("indices")) {
      tuple = tuple_from_json(values[v]["indices"], k, algebra_dim, path(field, "indices"));
      value = vector_from_json(member(values[v], "coeffs", field), m, path(field, "coeffs"));
    } else {
      if (!scalar_form) fail(field, "expected \"indices\" and \"coeffs\"");
      if (k >= 1) tuple.push_back(index_from_json(member(values[v], "i", field), algebra_dim, path(field, "i")));
      if (k >= 2) tuple.push_back(index_from_json(member(values[v], "j", field), algebra_dim, path(field, "j")));
      if (k >= 3) fail(field, "the i/j form covers degrees up to 2; use \"indices\"");
      if (k == 2 && tuple[0] >= tuple[1]) fail(field, "requires i < j");
      value = Vector::Constant(1, rational_from_json(member(values[v], "value", field), path(field, "value")));
    }
    f.set_value(tuple, value);
  }
  return f;
}

Json to_json(const Cochain& f) {
  Json out;
  out["degree"] = f.degree();
  out["module_dim"] = f.module_dim();
  Json values = Json::array();
  const auto& tuples = increasing_tuples(f.algebra_dim(), f.degree());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const Vector v = f.coords().segment(static_cast<Index>(t) * f.module_dim(), f.module_dim());
    if (is_zero(v)) continue;
    values.push_back({{"indices", tuples[t]}, {"coeffs", to_json(v)}});
  }
  out["values"] = std::move(values);
  return out;
}

Matrix operator_from_json(const Json& j) {
  const Index n = count_from_json(member(j, "dim", ""), "dim");
  return matrix_from_json(member(j, "matrix", ""), n, n, "matrix");
}

Json operator_to_json(const Matrix& op) { return Json{{"dim", op.rows()}, {"matrix", to_json(op)}}; }

LinearMap linear_map_from_json(const Json& j) {
  if (j.is_object() && j.contains("dim") && !j.contains("source_dim")) return LinearMap(operator_from_json(j));
  const Index source = count_from_json(member(j, "source_dim", ""), "source_dim");
  const Index target = count_from_json(member(j, "target_dim", ""), "target_dim");
  return LinearMap(source, target, matrix_from_json(member(j, "matrix", ""), target, source, "matrix"));
}

Json to_json(const LinearMap& map) {
  return Json{{"source_dim", map.source_dim()}, {"target_dim", map.target_dim()}, {"matrix", to_json(map.matrix())}};
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["property"] = report.property;
  out["holds"] = report.holds;
  if (report.counterexample) {
    Json c;
    c["indices"] = report.counterexample->indices;
    c["defect"] = to_json(report.counterexample->defect);
    if (!report.counterexample->context.empty()) c["context"] = report.counterexample->context;
    out["counterexample"] = std::move(c);
  }
  return out;
}

Json to_json(const CohomologyResult& result) {
  Json out;
  out["degree"] = result.degree;
  out["dim_Z"] = result.dim_Z;
  out["dim_B"] = result.dim_B;
  out["dim_H"] = result.dim_H;
  Json reps = Json::array();
  for (const auto& f : result.representatives) reps.push_back(to_json(f));
  out["representatives"] = std::move(reps);
  return out;
}

Json to_json(const GradedDerivationSpace& space) {
  Json out;
  out["grade"] = space.grade;
  out["dim"] = space.dim();
  Json basis = Json::array();
  for (const auto& op : space.operators()) basis.push_back(operator_to_json(op));
  out["basis"] = std::move(basis);
  return out;
}

}  // namespace homlie::io
