#pragma once

// JSON encodings. Rationals travel as "p/q" strings (integers may also be
// given as plain JSON integers on input). Matrix indices in messages and
// cycle node lists are 1-based.

#include "maxpres/analysis.hpp"
#include "maxpres/spectral.hpp"

#include <json.hpp>

namespace maxpres {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);

NonnegVector vector_from_json(const json& j);
json to_json(const NonnegVector& x);

/// Function descriptor: {"kind": "zero" | "identity" | "linear" | "power" |
/// "pwl" | "compose" | "max", ...}. Throws FormatError or InvalidFunction.
ScalarFn fn_from_json(const json& j);
json to_json(const ScalarFn& f);

/// {"n": int, "entries": [[F, ...], ...]}; row i, column j holds a_ij.
MpMap map_from_json(const json& j);
json to_json(const MpMap& a);

json to_json(const StabilityReport& r);
json to_json(const ClosureResult& c);
json to_json(const DescentCertificate& c);

}  // namespace maxpres
