#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "helpers.hpp"
#include "ulamk/io.hpp"
#include "ulamk/random.hpp"
#include "ulamk/solvers.hpp"

using namespace ulamk;
using ulamk::test::code_of;
using ulamk::test::figure1;
using json = nlohmann::json;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "ulamk");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / ("ulamk_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  io::write_text_file(dir / name, text);
  return dir / name;
}

std::string figure1_file() { return temp_file("figure1.json", io::to_json(figure1()).dump()).string(); }

}  // namespace

TEST_CASE("instance JSON round-trips") {
  const Instance f = figure1();
  CHECK(io::instance_from_json(io::to_json(f)) == f);
  CHECK(io::instance_from_json(json::parse(R"({"s":[[1,2]],"t":[[2,1]]})")).n() == 2);
}

TEST_CASE("instance JSON errors") {
  CHECK(code_of([] { io::instance_from_json(json::parse(R"([1,2])")); }) == Errc::ParseError);
  CHECK(code_of([] { io::instance_from_json(json::parse(R"({"s":[[1,2]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { io::instance_from_json(json::parse(R"({"s":[[1,"a"]],"t":[[1,2]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { io::instance_from_json(json::parse(R"({"n":3,"s":[[1,2]],"t":[[2,1]]})")); }) ==
        Errc::LengthMismatch);
  CHECK(code_of([] { io::instance_from_json(json::parse(R"({"k":2,"s":[[1,2]],"t":[[2,1]]})")); }) ==
        Errc::DimensionMismatch);
  CHECK(code_of([] { io::instance_from_json(json::parse(R"({"s":[[1,1]],"t":[[2,1]]})")); }) == Errc::DuplicateValue);
}

TEST_CASE("solver JSON layout") {
  const json j = io::to_json(brute_force_opt(figure1()), 6);
  CHECK(j["size"] == 4);
  CHECK(j["witness"] == json::array({1, 2, 3, 6}));
  CHECK(j["distance"] == 2);
  CHECK(j["optimal"] == true);
  CHECK(j.contains("nodes"));
}

TEST_CASE("parse_set") {
  CHECK(io::parse_set("1, 2,3") == FeasibleSet{1, 2, 3});
  CHECK(io::parse_set("").empty());
  CHECK(code_of([] { io::parse_set("1,x"); }) == Errc::ParseError);
  CHECK(code_of([] { io::parse_set("1,0"); }) == Errc::OutOfRange);
  CHECK(io::set_from_json(json::array({3, 1})) == FeasibleSet{1, 3});
}

TEST_CASE("DIMACS parsing") {
  std::istringstream ok("c comment\np cnf 3 2\n1 2 -3 0\n-1 2 3 0\n");
  const auto phi = io::parse_dimacs(ok);
  CHECK(phi.var_count == 3);
  REQUIRE(phi.clauses.size() == 2);
  CHECK(phi.clauses[0][2] == Literal{3, true});

  std::istringstream wide("p cnf 3 1\n1 2 0\n");
  CHECK(code_of([&] { io::parse_dimacs(wide); }) == Errc::MalformedClause);
  std::istringstream range("p cnf 2 1\n1 2 3 0\n");
  CHECK(code_of([&] { io::parse_dimacs(range); }) == Errc::MalformedClause);
  std::istringstream count("p cnf 3 2\n1 2 3 0\n");
  CHECK(code_of([&] { io::parse_dimacs(count); }) == Errc::ParseError);
  std::istringstream header("1 2 3 0\n");
  CHECK(code_of([&] { io::parse_dimacs(header); }) == Errc::ParseError);
}

TEST_CASE("edge list parsing") {
  std::istringstream ok("# path\nn 3\n1 2\n");
  const Graph g = io::parse_edge_list(ok);
  CHECK(g.n() == 3);
  CHECK(g.adjacent(2, 1));
  std::istringstream loop("n 3\n2 2\n");
  CHECK(code_of([&] { io::parse_edge_list(loop); }) == Errc::SelfLoop);
  std::istringstream missing("1 2\n");
  CHECK(code_of([&] { io::parse_edge_list(missing); }) == Errc::ParseError);
}

TEST_CASE("path JSON replays moves") {
  const Instance f = figure1();
  const auto j = json::parse(R"({"moves":[{"v":5,"pos":[2,4]},{"v":4,"pos":[4,6]}]})");
  const MovePath path = io::path_from_json(f, j);
  CHECK(path.end == f.target());
  CHECK(io::moves_to_json(path) == j["moves"]);
}

TEST_CASE("random generation is deterministic") {
  CHECK(gen_random(6, 2, 0) == gen_random(6, 2, 0));
  CHECK_FALSE(gen_random(6, 2, 0) == gen_random(6, 2, 1));
  const Instance one = gen_random(1, 3, 9);
  CHECK(ulam_distance(one).distance == 0);
  CHECK(code_of([] { gen_random(0, 1, 0); }) == Errc::OutOfRange);
  CHECK(code_of([] { gen_random(3, 0, 0); }) == Errc::OutOfRange);
}

TEST_CASE("cli distance and decide on the worked example") {
  const std::string file = figure1_file();
  auto r = call({"distance", file});
  CHECK(r.code == 0);
  CHECK(r.parsed()["distance"] == 2);
  CHECK(r.parsed()["removed"] == json::array({4, 5}));

  r = call({"distance", "--path", file});
  CHECK(r.parsed()["moves"].size() == 2);

  r = call({"decide", "--l", "0", file});
  CHECK(r.code == 0);
  CHECK(r.parsed()["answer"] == false);
  r = call({"decide", "--l", "2", file});
  CHECK(r.parsed()["answer"] == true);
  CHECK(call({"decide", "--l", "9", file}).code == cli::kInvalidInput);
}

TEST_CASE("cli solve methods") {
  const std::string file = figure1_file();
  for (const char* m : {"exact", "brute"}) {
    const auto r = call({"solve", m, file});
    CHECK(r.code == 0);
    CHECK(r.parsed()["size"] == 4);
  }
  CHECK(call({"--parallel", "solve", "brute", file}).parsed()["witness"] == json::array({1, 2, 3, 6}));
  CHECK(call({"solve", "k1", file}).code == cli::kInvalidInput);
  CHECK(call({"solve", "fancy", file}).code == cli::kInvalidInput);
  CHECK(call({"approx", file}).parsed()["size"] == 4);
}

TEST_CASE("cli exit codes") {
  const auto big = temp_file("big.json", io::to_json(gen_random(30, 2, 0)).dump());
  CHECK(call({"solve", "brute", big.string()}).code == cli::kSizeGuard);
  CHECK(call({"solve", "exact", big.string()}).code == cli::kOk);
  CHECK(call({"bench", "unknown"}).code == cli::kInvalidInput);
  CHECK(call({"distance", "/nonexistent/x.json"}).code == cli::kInvalidInput);
  CHECK(call({"distance", temp_file("bad.json", "{").string()}).code == cli::kInvalidInput);
  CHECK(call({}).code == cli::kInvalidInput);
  CHECK(call({"frobnicate"}).code == cli::kInvalidInput);

  const auto base = temp_file("base.json", R"({"s":[[1,2],[1,2]],"t":[[1,2],[2,1]]})");
  CHECK(call({"extract", base.string(), "--c", "2", "--set", "1,2,3,4"}).code == cli::kInfeasible);
  CHECK(call({"reduce", "power", base.string(), "--c", "30"}).code == cli::kSizeGuard);
}

TEST_CASE("cli gen output feeds every consumer") {
  auto g = call({"gen", "--n", "7", "--k", "2", "--seed", "5"});
  REQUIRE(g.code == 0);
  const auto file = temp_file("gen.json", g.out).string();
  CHECK(call({"solve", "exact", file}).code == 0);
  CHECK(call({"solve", "brute", file}).code == 0);
  CHECK(call({"approx", file}).code == 0);
  CHECK(call({"decide", "--l", "3", file}).code == 0);
  CHECK(call({"distance", "--path", file}).code == 0);
  CHECK(call({"pack", file}).code == 0);
  CHECK(call({"reduce", "pad", file, "--k", "3"}).code == 0);
  CHECK(call({"gen", "--n", "7", "--k", "2", "--seed", "5"}).out == g.out);
}

TEST_CASE("cli seed falls back to the environment") {
  ::setenv("ULAMK_SEED", "5", 1);
  CHECK(cli::default_seed() == 5);
  const auto env = call({"gen", "--n", "7", "--k", "2"});
  ::unsetenv("ULAMK_SEED");
  CHECK(cli::default_seed() == 0);
  CHECK(env.out == call({"gen", "--n", "7", "--k", "2", "--seed", "5"}).out);
  CHECK(call({"gen", "--n", "7", "--k", "2"}).out == call({"gen", "--n", "7", "--k", "2", "--seed", "0"}).out);
}

TEST_CASE("cli reductions") {
  const auto cnf = temp_file("f.cnf", "p cnf 3 2\n1 2 -3 0\n-1 2 3 0\n");
  const auto sym = fs::path(cnf).replace_extension(".sym.json");
  auto r = call({"reduce", "sat", cnf.string(), "--symbols", sym.string()});
  CHECK(r.code == 0);
  CHECK(r.parsed()["s"][1] == json::array({1, 3, 6, 2, 4, 5}));
  const json table = io::read_json_file(sym);
  CHECK(table["symbols"][1] == json::parse(R"({"id":2,"var":1,"neg":true,"occ":1})"));

  const auto edges = temp_file("g.txt", "n 3\n1 2\n");
  r = call({"reduce", "graph", edges.string()});
  CHECK(r.parsed()["k"] == 3);

  const auto base = temp_file("base.json", R"({"s":[[1,2],[1,2]],"t":[[1,2],[2,1]]})");
  r = call({"reduce", "power", base.string(), "--c", "2"});
  CHECK(r.parsed()["t"][1] == json::array({4, 3, 2, 1}));
  r = call({"reduce", "upower", base.string(), "--c", "2"});
  CHECK(r.parsed()["n"] == 4);
  r = call({"extract", base.string(), "--c", "2", "--set", "1"});
  CHECK(r.parsed()["set"] == json::array({1}));
  CHECK(r.parsed()["feasible"] == true);
  r = call({"extract", base.string(), "--c", "2", "--set", "1,2,4", "--kind", "u"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["feasible"] == true);
}

TEST_CASE("cli pack and frames") {
  const std::string file = figure1_file();
  const auto dir = fs::temp_directory_path() / ("ulamk_cli_frames_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto r = call({"pack", file, "--frames", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.parsed()["frames"].size() == 3);
  CHECK(r.parsed()["source"]["W"].is_number());
  CHECK(fs::exists(dir / "frame_002.svg"));
  const auto rects = temp_file("rects.json", R"({"w":[1,2],"h":[1,1]})");
  CHECK(call({"pack", file, "--rects", rects.string()}).code == cli::kInvalidInput);
  fs::remove_all(dir);
}

TEST_CASE("cli bench reports a single JSON line") {
  const auto r = call({"bench", "metric", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find('\n') == r.out.size() - 1);
  CHECK(r.parsed()["pass"] == true);
  CHECK(r.parsed()["criteria"][0]["id"] == 8);
  CHECK(r.err.find("[PASS]") != std::string::npos);
}
