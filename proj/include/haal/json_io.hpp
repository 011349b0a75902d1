#pragma once

#include "haal/intpoly.hpp"
#include "haal/matrix.hpp"
#include "haal/quaternion.hpp"
#include "haal/ratpoly.hpp"

#include <json.hpp>

#include <string>

namespace haal {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const Quaternion& h);
Json to_json(const QuatMatrix& q);
Json to_json(const IntPoly& p);  // ascending integer strings
Json to_json(const RatPoly& p);
Json to_json(const SigmaTuple& s);

// Accepts "p/q" strings, decimal strings and JSON integers.
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j);
// {"rows","cols","entries"} or a bare nested array.
RatMatrix matrix_from_json(const Json& j);
Quaternion quaternion_from_json(const Json& j);
QuatMatrix quat_matrix_from_json(const Json& j);
IntPoly intpoly_from_json(const Json& j);

// Reads a whole file (or "-" for stdin) as JSON; throws ParseError on bad syntax.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace haal
