#pragma once
/**
 * @file json_io.hpp
 * @brief JSON serialization of the library's value types.
 *
 * Every exact rational is encoded as a string, "p" for integers and "p/q"
 * otherwise, so values round-trip bit-exactly; purely structural integers
 * (ranks, partition entries, degrees) are plain JSON numbers, and measured
 * floating-point quantities (residuals, numeric coordinates) are JSON
 * doubles.  Polynomials are arrays of coefficient strings in ascending
 * degree order; the zero polynomial is ["0"].
 */

#include <json.hpp>

#include "bp/bethe.hpp"
#include "bp/params.hpp"
#include "bp/poly.hpp"
#include "bp/rational.hpp"
#include "bp/spaces.hpp"

namespace bp {

using json = nlohmann::json;

/// "p" or "p/q" encoding of an exact rational.
json rational_to_json(const Rational& r);

/// Parse "p"/"p/q" strings (or plain JSON integers); floats are rejected.
Rational rational_from_json(const json& j);

/// Ascending coefficient strings ["c0", ..., "cn"]; zero encodes as ["0"].
json poly_to_json(const Poly& p);

/// Inverse of poly_to_json; accepts any coefficient spelling rational_from_json does.
Poly poly_from_json(const json& j);

/// {"m": [rationals], "l": [ints], "k": rational}.
json params_to_json(const Params& pr);

/// Inverse of params_to_json (shape-validated via Params::make).
Params params_from_json(const json& j);

/// Tuple as an array of polynomial encodings, level 1 first.
json ytuple_to_json(const YTuple& yt);

/// Inverse of ytuple_to_json.
YTuple ytuple_from_json(const json& j);

/// {"kind": "V"|"U", "params": ..., "degrees": [ints], "basis": [polys]}.
json space_to_json(const PolySpace& space);

/// Itemized genericity verdict with its witness description.
json genericity_to_json(const GenericityReport& rep);

/**
 * Solver outcome.  "solution" carries the point (exact coordinates as
 * rational strings, numeric ones as {"re", "im"} doubles) and its residual;
 * "no_solution" carries a witness string — the exact identity "y1 = y2^2"
 * when that equality holds, otherwise the genericity report's witness;
 * "complex_roots_detected" carries only the outcome tag.
 */
json bae_result_to_json(const BaeResult& res);

}  // namespace bp
