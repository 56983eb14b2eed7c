#pragma once

// Canonical file formats.
//
//   instance  {"n":6,"k":2,"s":[[...],...],"t":[[...],...]}
//   result    {"size":4,"witness":[...],"distance":2,"optimal":true,"nodes":17}
//   path      {"moves":[{"v":5,"pos":[2,4]},...]}
//   rects     {"w":[...],"h":[...]}
//   symbols   {"symbols":[{"id":1,"var":1,"neg":false,"occ":1},...]}
//   CNF       DIMACS subset: "p cnf V C", three literals per clause, 0-terminated
//   graph     "n <count>" header, then one "u v" pair per line

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ulamk/core.hpp"
#include "ulamk/path.hpp"
#include "ulamk/reductions.hpp"
#include "ulamk/seqpair.hpp"
#include "ulamk/solvers.hpp"

namespace ulamk::io {

using nlohmann::json;

/// Throws ParseError for structural problems and the core validation errors
/// for bad permutations.
Instance instance_from_json(const json& j);
json to_json(const Instance& inst);

json to_json(const FeasibleSet& set);
FeasibleSet set_from_json(const json& j);
/// "1,2,3" or "" (empty set).
FeasibleSet parse_set(const std::string& text);

json to_json(const SolveResult& r, std::size_t n);
json to_json(const UlamResult& r);
json moves_to_json(const MovePath& path);
/// Rebuilds a path for `inst` from the "moves" array; the end tuple is
/// obtained by replaying, so verify_path() still checks against the target.
MovePath path_from_json(const Instance& inst, const json& j);

RectSpec rects_from_json(const json& j);
json to_json(const Placement& p);
json to_json(const SymbolTable& table);

CnfFormula parse_dimacs(std::istream& in);
Graph parse_edge_list(std::istream& in);

json read_json_file(const std::filesystem::path& p);
Instance read_instance(const std::filesystem::path& p);
std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

}  // namespace ulamk::io
