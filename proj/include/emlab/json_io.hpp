#pragma once

#include <string>

#include "json.hpp"

#include "emlab/coloring.hpp"
#include "emlab/finset.hpp"
#include "emlab/limitmin.hpp"
#include "emlab/ordinal.hpp"
#include "emlab/witness.hpp"

namespace emlab {

// Wire formats. FinSet: [4,5,6] or the interval shorthand
// {"from": a, "to": b} meaning {a, ..., b}. Ordinals travel as grammar
// strings. PairColoring: {"ground": [...], "colors": k,
// "pairs": [[x, y, color], ...]} with every pair present exactly once, x < y.

nlohmann::json finset_to_json(const FinSet& s);
FinSet finset_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const PairColoring& c);
PairColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json grouping_to_json(const Grouping& g);
Grouping grouping_from_json(const nlohmann::json& j);

nlohmann::json violations_to_json(const std::vector<GroupingViolation>& v);

// ValueTable: {"u": ..., "horizon": ..., "rows": [[...], ...]}.
nlohmann::json valuetable_to_json(const ValueTable& t);
ValueTable valuetable_from_json(const nlohmann::json& j);

// ThetaTable: {"a_bound": A, "b_bound": B, "y_bound": Y, "z_bound": Z,
// "values": [0/1 ...]} row-major in (a, b, y, z).
nlohmann::json thetatable_to_json(const ThetaTable& t);
ThetaTable thetatable_from_json(const nlohmann::json& j);

// Strict parse wrapper that converts json exceptions into ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace emlab
