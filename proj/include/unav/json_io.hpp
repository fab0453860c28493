#pragma once

#include <string>

#include <json.hpp>

#include "unav/balance.hpp"
#include "unav/coloring.hpp"
#include "unav/graph.hpp"
#include "unav/multicolor.hpp"
#include "unav/patterns.hpp"
#include "unav/search.hpp"

namespace unav {

using nlohmann::json;

// Coloring file formats:
//   two-coloring: {"n": int, "red": [[u,v], ...]}
//   k-coloring:   {"n": int, "k": int, "edges": [[u,v,color], ...]}
json to_json(const TwoColoring& c);
TwoColoring two_coloring_from_json(const json& j);
json to_json(const KColoring& c);
KColoring kcoloring_from_json(const json& j);

json to_json(const SimpleGraph& g);
json to_json(const PatternWitness& w);
json to_json(const BalanceWitness& w);
json to_json(const CkReport& r);
json to_json(const ColorClassification& c);

// Canonical certificate JSON: deterministic content only (wall time is
// reported separately so identical searches serialize identically).
json to_json(const ExtremalCertificate& cert);

// DOT rendering of a coloring (red solid, blue dashed) or a plain graph.
std::string to_dot(const TwoColoring& c);
std::string to_dot(const SimpleGraph& g);

} // namespace unav
