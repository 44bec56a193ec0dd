#pragma once

// JSON and text encodings shared by the CLI and the tests. Rationals are
// "num/den" strings; parse failures throw ParseError naming the field.

#include <string>

#include <json.hpp>

#include "ramfac/colorsearch.hpp"
#include "ramfac/ffmat.hpp"
#include "ramfac/metricfree.hpp"
#include "ramfac/normgeo.hpp"

namespace ramfac {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const RatVec& v);
Json to_json(const std::vector<RatVec>& rows);
Json to_json(const RatMatrix& m);
/// {"p", "rows", "cols", "entries": [[int]]}
Json to_json(const PrimeFieldMatrix& m);
Json to_json(const PolyhedralSpace& s, bool with_vertices = true);
Json to_json(const FiniteMetricSpace& m);
Json to_json(const SearchOutcome& o);

Rational rational_from_json(const Json& j, const std::string& field);
RatVec ratvec_from_json(const Json& j, const std::string& field);
std::vector<RatVec> rows_from_json(const Json& j, const std::string& field);
PrimeFieldMatrix ffmatrix_from_json(const Json& j);

/// {"dim": k, "functionals": [[...]], "vertices"?: [[...]]}. At least one of
/// the two descriptions must be present; when both are, they must agree.
PolyhedralSpace space_from_json(const Json& j);
/// {"n": int, "d": [[...]], "basepoint"?: int}
FiniteMetricSpace metric_from_json(const Json& j);
/// One row per line (or ';'), comma separated; blank lines and '#' comments skipped.
FiniteMetricSpace metric_from_csv(const std::string& text, std::size_t basepoint = 0);

/// "11,01,10": rows separated by ',', ';' or newlines. A row with spaces is split on
/// them; otherwise every character is one digit.
std::vector<std::vector<long>> parse_int_rows(const std::string& text);
/// "1 1; 1 -1": rows separated by ';' or newlines, entries by spaces or ','.
std::vector<RatVec> parse_rational_rows(const std::string& text);

}  // namespace ramfac
