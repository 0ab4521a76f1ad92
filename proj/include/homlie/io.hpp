#pragma once

// JSON file formats. Rationals are strings "p" or "p/q"; matrices are arrays
// of rows; all indices are 0-based. Every reader throws Errc::ParseError with
// the offending field path.

#include "homlie/algebra.hpp"
#include "homlie/cochain.hpp"
#include "homlie/cohomology.hpp"
#include "homlie/derivations.hpp"
#include "homlie/representation.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace homlie::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors carry line and column.
Json parse(std::string_view text, std::string_view source = "<input>");
Json read_file(const std::filesystem::path& path);

Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const Rational& x);

Vector vector_from_json(const Json& j, Index size, const std::string& field);
Json to_json(const Vector& v);

Matrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& field);
Json to_json(const Matrix& m);

/// {"dim": n, "basis": [...], "brackets": [{"i","j","coeffs"}], "alpha": [[...]]}
HomLieAlgebra algebra_from_json(const Json& j);
Json to_json(const HomLieAlgebra& g);

/// {"module_dim": m, "rho": [n matrices], "A": [[...]]}
RepresentationData representation_from_json(const Json& j, Index algebra_dim);
Json to_json(const RepresentationData& data);

/// {"degree": k, "module_dim": m, "values": [{"indices": [...], "coeffs": [...]}]},
/// or the scalar form {"degree": k, "values": [{"i": i, "j": j, "value": "p/q"}]}.
/// Omitted tuples are zero.
Cochain cochain_from_json(const Json& j, Index algebra_dim);
Json to_json(const Cochain& f);

/// {"dim": n, "matrix": [[...]]}
Matrix operator_from_json(const Json& j);
Json operator_to_json(const Matrix& op);

/// {"source_dim": n, "target_dim": m, "matrix": [[...]]} (m rows); operator files are accepted too.
LinearMap linear_map_from_json(const Json& j);
Json to_json(const LinearMap& map);

Json to_json(const VerificationReport& report);
Json to_json(const CohomologyResult& result);
Json to_json(const GradedDerivationSpace& space);

}  // namespace homlie::io
