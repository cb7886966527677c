#pragma once

#include <string>

#include <json.hpp>

#include "k3lat/lattice.hpp"
#include "k3lat/poly.hpp"

namespace k3lat {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json to_json(const Integer& n);
/// Integral rationals become numbers, others "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);

/// Accepts JSON integers or decimal strings. Error("malformed_json") otherwise.
Integer integer_from_json(const Json& j);
/// Accepts integers, "n" or "p/q" strings.
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

/// {"name": string?, "labels": [string]?, "gram": [[integer]]}; empty name
/// and labels are omitted.
Json lattice_to_json(const Lattice& l);
/// Schema violations raise Error("malformed_json"); a non-symmetric or
/// singular Gram matrix raises the lattice's own error.
Lattice lattice_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error("malformed_json").
Json parse_json(const std::string& text);

}  // namespace k3lat
