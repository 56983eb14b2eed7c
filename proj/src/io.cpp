#include "ulamk/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>

namespace ulamk::io {

namespace {

RawTuple raw_tuple(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(Errc::ParseError, std::string("instance field \"") + key + "\" must be an array of arrays");
  }
  RawTuple out;
  for (const auto& dim : j[key]) {
    if (!dim.is_array()) throw Error(Errc::ParseError, std::string("\"") + key + "\" entries must be arrays");
    std::vector<long long> row;
    for (const auto& v : dim) {
      if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string("\"") + key + "\" values must be integers");
      row.push_back(v.get<long long>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<long long> int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(Errc::ParseError, std::string("field \"") + key + "\" must be an integer array");
  }
  std::vector<long long> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string("\"") + key + "\" values must be integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

json tuple_json(const PermutationTuple& tuple) {
  json out = json::array();
  for (const auto& perm : tuple) out.push_back(std::vector<Label>(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "instance must be a JSON object");
  Instance inst = validate_instance(raw_tuple(j, "s"), raw_tuple(j, "t"));
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(inst.n()))) {
    throw Error(Errc::LengthMismatch, "declared n does not match the permutations (n=" + std::to_string(inst.n()) + ")");
  }
  if (j.contains("k") && (!j["k"].is_number_integer() || j["k"].get<long long>() != static_cast<long long>(inst.k()))) {
    throw Error(Errc::DimensionMismatch, "declared k does not match the permutations (k=" + std::to_string(inst.k()) + ")");
  }
  return inst;
}

json to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n();
  j["k"] = inst.k();
  j["s"] = tuple_json(inst.source());
  j["t"] = tuple_json(inst.target());
  return j;
}

json to_json(const FeasibleSet& set) { return std::vector<Label>(set.begin(), set.end()); }

FeasibleSet set_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "set must be an integer array");
  std::vector<Label> members;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, "set values must be integers");
    const auto x = v.get<long long>();
    if (x < 1 || x > std::numeric_limits<Label>::max()) throw Error(Errc::OutOfRange, "set member out of range");
    members.push_back(static_cast<Label>(x));
  }
  return FeasibleSet(std::move(members));
}

FeasibleSet parse_set(const std::string& text) {
  std::vector<Label> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad set member \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error(Errc::ParseError, "bad set member \"" + item + "\"");
    }
    if (v < 1 || v > std::numeric_limits<Label>::max()) throw Error(Errc::OutOfRange, "set member " + item);
    members.push_back(static_cast<Label>(v));
  }
  return FeasibleSet(std::move(members));
}

json to_json(const SolveResult& r, std::size_t n) {
  json j;
  j["size"] = r.size;
  j["witness"] = to_json(r.witness);
  j["distance"] = n - r.size;
  j["optimal"] = r.optimal;
  j["nodes"] = r.node_count;
  return j;
}

json to_json(const UlamResult& r) {
  json j;
  j["distance"] = r.distance;
  j["removed"] = to_json(r.removed);
  j["fixed"] = to_json(r.fixed);
  return j;
}

json moves_to_json(const MovePath& path) {
  json moves = json::array();
  for (const auto& mv : path.moves) moves.push_back({{"v", mv.element}, {"pos", mv.targets}});
  return moves;
}

MovePath path_from_json(const Instance& inst, const json& j) {
  const json& moves = j.is_object() && j.contains("moves") ? j["moves"] : j;
  if (!moves.is_array()) throw Error(Errc::ParseError, "path needs a \"moves\" array");
  MovePath path;
  path.start = inst.source();
  PermutationTuple gamma = inst.source();
  for (const auto& m : moves) {
    if (!m.is_object() || !m.contains("v") || !m["v"].is_number_integer() || !m.contains("pos") ||
        !m["pos"].is_array()) {
      throw Error(Errc::ParseError, "move entries need integer \"v\" and array \"pos\"");
    }
    InsertMove mv;
    mv.element = m["v"].get<Label>();
    for (const auto& p : m["pos"]) {
      if (!p.is_number_integer() || p.get<long long>() < 0) throw Error(Errc::ParseError, "move positions must be non-negative integers");
      mv.targets.push_back(p.get<std::size_t>());
    }
    gamma = apply_insert_move(gamma, mv);
    path.moves.push_back(std::move(mv));
  }
  path.end = gamma;
  return path;
}

RectSpec rects_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "rects must be a JSON object");
  return {int_array(j, "w"), int_array(j, "h")};
}

json to_json(const Placement& p) {
  json j;
  j["x"] = p.x;
  j["y"] = p.y;
  j["W"] = p.width;
  j["H"] = p.height;
  return j;
}

json to_json(const SymbolTable& table) {
  json syms = json::array();
  for (const Symbol& s : table.symbols()) {
    syms.push_back({{"id", s.id}, {"var", s.var}, {"neg", s.neg}, {"occ", s.occ}});
  }
  return {{"symbols", syms}};
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  long long declared_clauses = -1;
  std::vector<long long> pending;
  std::string line;
  std::size_t lineno = 0;
  auto where = [&] { return "line " + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long long vars = 0;
      if (!(ls >> fmt >> vars >> declared_clauses) || fmt != "cnf" || vars < 1 || declared_clauses < 0) {
        throw Error(Errc::ParseError, where() + ": bad problem line");
      }
      phi.var_count = static_cast<int>(vars);
      continue;
    }
    if (phi.var_count == 0) throw Error(Errc::ParseError, where() + ": clause before \"p cnf\" header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit != 0) {
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw Error(Errc::MalformedClause, where() + ": clause has " + std::to_string(pending.size()) +
                                               " literals, expected 3");
      }
      std::array<Literal, 3> clause;
      for (std::size_t i = 0; i < 3; ++i) {
        const long long v = pending[i] < 0 ? -pending[i] : pending[i];
        if (v > phi.var_count) {
          throw Error(Errc::MalformedClause, where() + ": variable " + std::to_string(v) + " exceeds declared count");
        }
        clause[i] = {static_cast<int>(v), pending[i] < 0};
      }
      phi.clauses.push_back(clause);
      pending.clear();
    }
    if (!ls.eof()) throw Error(Errc::ParseError, where() + ": non-integer token");
  }
  if (!pending.empty()) throw Error(Errc::MalformedClause, "last clause is not 0-terminated");
  if (phi.var_count == 0) throw Error(Errc::ParseError, "missing \"p cnf\" header");
  if (declared_clauses >= 0 && static_cast<std::size_t>(declared_clauses) != phi.clauses.size()) {
    throw Error(Errc::ParseError, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(phi.clauses.size()));
  }
  return phi;
}

Graph parse_edge_list(std::istream& in) {
  std::optional<Graph> g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "n") {
      long long n = 0;
      if (!(ls >> n) || n < 1) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad header");
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (!g) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": edge before \"n\" header");
    long long u = 0;
    long long v = 0;
    ls.clear();
    ls.str(line);
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest)) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\"");
    }
    g->add_edge(static_cast<Label>(u), static_cast<Label>(v));
  }
  if (!g) throw Error(Errc::ParseError, "missing \"n\" header");
  return *g;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + p.string());
  out << text;
}

json read_json_file(const std::filesystem::path& p) {
  const std::string text = read_text_file(p);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, p.string() + ": " + e.what());
  }
}

Instance read_instance(const std::filesystem::path& p) { return instance_from_json(read_json_file(p)); }

}  // namespace ulamk::io
