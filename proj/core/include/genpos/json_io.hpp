#pragma once

#include <string>
#include <string_view>

#include "genpos/families.hpp"
#include "genpos/graph.hpp"
#include "genpos/position.hpp"
#include "genpos/removal.hpp"
#include "genpos/solve.hpp"

namespace genpos {

/// Edge-list JSON: {"n": int, "edges": [[u,v],...], "name": str?}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// {"kind":str,"size":int,"witness":[int],"method":str,"millis":int}
/// millis is emitted as 0 unless include_millis is set, keeping default
/// output byte-stable across runs.
std::string solve_result_to_json(const SolveResult& r,
                                 bool include_millis = false);

/// {"kind":str,"holds":bool,"witness":{"u":int,"v":int,"w":int}?}
std::string diagnostics_to_json(const CheckDiagnostics& d);

std::string report_to_json(const RemovalReport& r);

std::string family_to_json(const FamilyInstance& f);

/// {"mode":"enumerate"|"random","n":int,"p":float?,"count":int?,"seed":int?}
SweepManifest manifest_from_json(std::string_view text);

std::string violation_to_json(const ConjectureViolation& v);

}  // namespace genpos
