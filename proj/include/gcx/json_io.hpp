#pragma once

#include <json.hpp>

#include "gcx/feynman.hpp"
#include "gcx/graph.hpp"

namespace gcx::json_io {

using Json = nlohmann::ordered_json;

// Graph schema (bit-exact):
// {"vertices":[{"id":..,"genus":..}],"flags":[{"id":..,"vertex":..}],
//  "edges":[[fA,fB],...],"legs":{"1":flagId,...}}
Json graph_to_json(const graph::ModularGraph& g);
graph::ModularGraph graph_from_json(const Json& j);

// {"g":..,"n":..,"terms":[{"graph":..,"orientation":[[fA,fB],..],
//  "basis_index":..,"coeff":"p/q"},...]}
Json chain_to_json(feynman::Complex& cx, const feynman::Chain& c);

}  // namespace gcx::json_io
