#pragma once

#include <json.hpp>

#include "foxcolor/arc_matrix.hpp"
#include "foxcolor/euler_graph.hpp"
#include "foxcolor/exact_linalg.hpp"
#include "foxcolor/fox_coloring.hpp"
#include "foxcolor/gauss_code.hpp"
#include "foxcolor/kh_verify.hpp"

// Stable JSON surface for CLI output. Big integers are written as numbers
// while they fit in 53 bits and as decimal strings beyond that; report-level
// determinants are always decimal strings.
namespace foxcolor::json {

using Json = nlohmann::ordered_json;

Json integer(const BigInt& v);
Json to_json(const IntMatrix& m);
Json to_json(const ColoringMatrix& m);
Json to_json(const Coloring& c);
Json to_json(const DirectedMultigraph& g);
Json to_json(const DiagramClass& d, const GaussCode& code);
Json to_json(const KHReport& r);
Json to_json(const Lemma22Report& r);
/// `include_timing` adds the (nondeterministic) wall time.
Json to_json(const FuzzReport& r, bool include_timing = false);

/// Array of arrays of integers (numbers or decimal strings). Throws
/// InvalidConfig on anything else.
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace foxcolor::json
