#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cycmzv/bigfloat.hpp"
#include "cycmzv/cyclotomic.hpp"
#include "cycmzv/finite_values.hpp"
#include "cycmzv/hpoly.hpp"
#include "cycmzv/numeric.hpp"
#include "cycmzv/relations.hpp"

namespace cycmzv {

using Json = nlohmann::ordered_json;

/// {"n": level, "coeffs": ["p/q", ...]} in the power basis.
Json to_json(const CycloElem& x);
CycloElem cyclo_from_json(const Json& j);

/// [{"index": "k1,k2", "hbar": d, "coeff": "p/q"}, ...]
Json to_json(const HPoly& w);
/// Throws ParseError on malformed input.
HPoly hpoly_from_json(const Json& j);
HPoly parse_hpoly(const std::string& text);

Json to_json(const RelationReport& r);
Json to_json(const KerPhiReport& r);

/// Fixed significant-digit decimal rendering (deterministic).
std::string format_float(const BigFloat& x, int digits);
Json to_json(const BigComplex& z, int digits);
Json to_json(const XiEstimate& e, int digits);

std::string dimension_table_csv(const std::vector<DimensionRow>& rows);
Json dimension_table_json(const std::vector<DimensionRow>& rows);

std::string to_string(Ring r);

}  // namespace cycmzv
