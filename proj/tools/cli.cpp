#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ulamk/io.hpp"
#include "ulamk/path.hpp"
#include "ulamk/random.hpp"
#include "ulamk/reductions.hpp"
#include "ulamk/seqpair.hpp"
#include "ulamk/solvers.hpp"
#include "ulamk/suites.hpp"

namespace ulamk::cli {

namespace {

using json = nlohmann::json;

constexpr std::size_t kExactWarnAbove = 200;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotFeasible:
    case Errc::InvalidPath:
    case Errc::Inconsistent:
      return kInfeasible;
    case Errc::TooLarge:
    case Errc::LevelTooLarge:
      return kSizeGuard;
    default:
      return kInvalidInput;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw Error(Errc::IoError, "missing input file");
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return io::read_text_file(path);
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, origin + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) { return io::instance_from_json(parse_json_text(read_input(path), path)); }

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << j.dump() << '\n';
  } else {
    io::write_text_file(cfg.output, j.dump() + "\n");
  }
}

RectSpec load_rects(const RunConfig& cfg, std::size_t n) {
  if (cfg.rects.empty()) return RectSpec::unit(n);
  RectSpec rects = io::rects_from_json(io::read_json_file(cfg.rects));
  validate_rects(rects, n);
  return rects;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg.input);
  SolveResult r;
  if (cfg.mode == "exact") {
    if (inst.n() > kExactWarnAbove) {
      err << "warning: exact clique search on n=" << inst.n() << " may take a long time\n";
    }
    r = solve_lfs_exact(inst);
  } else if (cfg.mode == "brute") {
    r = cfg.parallel ? brute_force_opt_parallel(inst) : brute_force_opt(inst);
  } else if (cfg.mode == "k1") {
    r = solve_lfs_k1(inst);
  } else {
    throw Error(Errc::ParseError, "solve method must be exact, brute or k1");
  }
  emit(io::to_json(r, inst.n()), cfg, out);
  return kOk;
}

int cmd_approx(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  const auto r = approx_u(inst);
  json j;
  j["size"] = r.size;
  j["witness"] = io::to_json(r.witness);
  j["fixed"] = io::to_json(dual_complement(inst, r.witness));
  j["distance_upper_bound"] = r.size;
  j["optimal"] = false;
  emit(j, cfg, out);
  return kOk;
}

int cmd_decide(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  if (cfg.l < 0) throw Error(Errc::OutOfRange, "decide needs --l in [0, n]");
  const auto r = decide_ud_fpt(inst, cfg.l);
  json j;
  j["answer"] = r.answer;
  j["l"] = cfg.l;
  j["nodes"] = r.node_count;
  if (r.answer) j["removed"] = io::to_json(r.removed);
  emit(j, cfg, out);
  return kOk;
}

int cmd_distance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(cfg.input);
  if (inst.n() > kExactWarnAbove) {
    err << "warning: exact clique search on n=" << inst.n() << " may take a long time\n";
  }
  const auto r = ulam_distance(inst);
  json j = io::to_json(r);
  if (cfg.emit_path || !cfg.frames_dir.empty()) {
    const auto path = reconstruct_path(inst, r.fixed);
    if (cfg.emit_path) j["moves"] = io::moves_to_json(path);
    if (!cfg.frames_dir.empty()) j["frames"] = render_frames(inst, path, load_rects(cfg, inst.n()), cfg.frames_dir);
  }
  emit(j, cfg, out);
  return kOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.mode == "sat") {
    std::istringstream in(read_input(cfg.input));
    const auto red = sat_to_2lfs(io::parse_dimacs(in));
    if (!cfg.symbols_out.empty()) io::write_text_file(cfg.symbols_out, io::to_json(red.table).dump() + "\n");
    emit(io::to_json(red.instance), cfg, out);
  } else if (cfg.mode == "graph") {
    std::istringstream in(read_input(cfg.input));
    emit(io::to_json(graph_to_nlfs(io::parse_edge_list(in))), cfg, out);
  } else if (cfg.mode == "power") {
    emit(io::to_json(power_construct(load_instance(cfg.input), cfg.c).lifted()), cfg, out);
  } else if (cfg.mode == "upower") {
    emit(io::to_json(u_power_construct(load_instance(cfg.input), cfg.c)), cfg, out);
  } else if (cfg.mode == "pad") {
    if (cfg.k < 1) throw Error(Errc::OutOfRange, "pad needs --k >= 1");
    emit(io::to_json(pad_dimensions(load_instance(cfg.input), static_cast<std::size_t>(cfg.k))), cfg, out);
  } else {
    throw Error(Errc::ParseError, "reduce kind must be sat, graph, power, upower or pad");
  }
  return kOk;
}

int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance base = load_instance(cfg.input);
  const FeasibleSet J = io::parse_set(cfg.set);
  FeasibleSet got;
  bool feasible = false;
  if (cfg.mode.empty() || cfg.mode == "lfs") {
    const auto pinst = power_construct(base, cfg.c);
    got = extract_lfs(pinst, cfg.c, J);
    feasible = is_feasible(base, got);
  } else if (cfg.mode == "u") {
    const Instance lifted = u_power_construct(base, cfg.c);
    got = u_extract(lifted, J, base.n(), cfg.c);
    feasible = is_feasible(base, dual_complement(base, got));
  } else {
    throw Error(Errc::ParseError, "extract kind must be lfs or u");
  }
  json j;
  j["set"] = io::to_json(got);
  j["size"] = got.size();
  j["feasible"] = feasible;
  emit(j, cfg, out);
  return kOk;
}

int cmd_pack(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Instance inst = load_instance(cfg.input);
  if (inst.k() != 2) throw Error(Errc::ShapeMismatch, "pack needs k=2, got k=" + std::to_string(inst.k()));
  const RectSpec rects = load_rects(cfg, inst.n());
  json j;
  j["source"] = io::to_json(sp_place(inst.source()[0], inst.source()[1], rects));
  j["target"] = io::to_json(sp_place(inst.target()[0], inst.target()[1], rects));
  if (!cfg.frames_dir.empty()) {
    const auto dist = ulam_distance(inst);
    const auto path = reconstruct_path(inst, dist.fixed);
    j["moves"] = io::moves_to_json(path);
    j["frames"] = render_frames(inst, path, rects, cfg.frames_dir);
  }
  emit(j, cfg, out);
  return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.n < 1 || cfg.k < 1) throw Error(Errc::OutOfRange, "gen needs --n >= 1 and --k >= 1");
  emit(io::to_json(gen_random(static_cast<std::size_t>(cfg.n), static_cast<std::size_t>(cfg.k), cfg.seed)), cfg, out);
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.parallel = cfg.parallel;
  const auto criteria = cfg.mode == "all" ? run_all_suites(opt) : run_suite(cfg.mode, opt);
  json report;
  report["suite"] = cfg.mode;
  report["seed"] = cfg.seed;
  report["criteria"] = json::array();
  bool all = true;
  for (const auto& c : criteria) {
    err << summary_line(c) << '\n';
    report["criteria"].push_back(to_json(c));
    all = all && c.pass;
  }
  report["pass"] = all;
  emit(report, cfg, out);
  return all ? kOk : kFailure;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("ULAMK_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "solve") return cmd_solve(cfg, out, err);
    if (cfg.command == "approx") return cmd_approx(cfg, out, err);
    if (cfg.command == "decide") return cmd_decide(cfg, out, err);
    if (cfg.command == "distance") return cmd_distance(cfg, out, err);
    if (cfg.command == "reduce") return cmd_reduce(cfg, out, err);
    if (cfg.command == "extract") return cmd_extract(cfg, out, err);
    if (cfg.command == "pack") return cmd_pack(cfg, out, err);
    if (cfg.command == "gen") return cmd_gen(cfg, out, err);
    if (cfg.command == "bench") return cmd_bench(cfg, out, err);
    err << "error: unknown command \"" << cfg.command << "\"\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ulamk: k-dimensional Ulam distance toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  app.add_flag("--parallel", cfg.parallel, "Use the OpenMP code paths where available");
  app.add_option("-o,--output", cfg.output, "Write the JSON result to a file instead of stdout");

  auto* solve = app.add_subcommand("solve", "Largest fixed subset");
  solve->add_option("method", cfg.mode, "exact | brute | k1")->required()->check(CLI::IsMember({"exact", "brute", "k1"}));
  solve->add_option("instance", cfg.input, "Instance JSON ('-' for stdin)")->required();

  auto* approx = app.add_subcommand("approx", "2-approximate kU set via maximal matching");
  approx->add_option("instance", cfg.input)->required();

  auto* decide = app.add_subcommand("decide", "Is the distance at most l? (bounded search tree)");
  decide->add_option("--l", cfg.l, "Budget l in [0, n]")->required();
  decide->add_option("instance", cfg.input)->required();

  auto* distance = app.add_subcommand("distance", "Ulam distance with witness sets");
  distance->add_flag("--path", cfg.emit_path, "Append a shortest insert-move path");
  distance->add_option("--frames", cfg.frames_dir, "Render the path as SVG frames (k=2)");
  distance->add_option("--rects", cfg.rects, "Rectangle sizes JSON for --frames");
  distance->add_option("instance", cfg.input)->required();

  auto* reduce = app.add_subcommand("reduce", "Generate reduction instances");
  reduce->add_option("kind", cfg.mode, "sat | graph | power | upower | pad")
      ->required()
      ->check(CLI::IsMember({"sat", "graph", "power", "upower", "pad"}));
  reduce->add_option("input", cfg.input, "DIMACS CNF, edge list, or base instance JSON")->required();
  reduce->add_option("--c", cfg.c, "Power level c >= 1");
  reduce->add_option("--k", cfg.k, "Target dimension count for pad");
  reduce->add_option("--symbols", cfg.symbols_out, "Write the SAT symbol table sidecar here");

  auto* extract = app.add_subcommand("extract", "Map a lifted solution back to the base instance");
  extract->add_option("instance", cfg.input, "Base instance JSON")->required();
  extract->add_option("--c", cfg.c, "Power level c >= 1");
  extract->add_option("--set", cfg.set, "Comma-separated set of the lifted instance")->required();
  extract->add_option("--kind", cfg.mode, "lfs (power tower) | u (shifted copies)")->check(CLI::IsMember({"lfs", "u"}));

  auto* pack = app.add_subcommand("pack", "Sequence-pair placement of a k=2 instance");
  pack->add_option("instance", cfg.input)->required();
  pack->add_option("--rects", cfg.rects, "Rectangle sizes JSON (unit squares if omitted)");
  pack->add_option("--frames", cfg.frames_dir, "Render the repacking path as SVG frames");

  auto* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--n", cfg.n)->required();
  gen->add_option("--k", cfg.k)->required();
  gen->add_option("--seed", seed, "Defaults to $ULAMK_SEED, else 0");

  auto* bench = app.add_subcommand("bench", "Run an acceptance suite");
  bench->add_option("suite", cfg.mode, "oracle | sat | graph | power | path | metric | bdj | approx | all")->required();
  bench->add_option("--seed", seed, "Defaults to $ULAMK_SEED, else 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.seed = seed.value_or(default_seed());
  return run(cfg, out, err);
}

}  // namespace ulamk::cli
