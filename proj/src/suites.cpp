#include "ulamk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>

#include <unistd.h>

#include "ulamk/io.hpp"
#include "ulamk/oracles.hpp"
#include "ulamk/path.hpp"
#include "ulamk/random.hpp"
#include "ulamk/reductions.hpp"
#include "ulamk/seqpair.hpp"
#include "ulamk/solvers.hpp"

namespace ulamk {

namespace {

using json = nlohmann::json;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs body(i) for i in [0, count). In parallel mode the first exception (by
// index) is rethrown after the loop.
void for_each_index(std::size_t count, bool parallel, const std::function<void(std::size_t)>& body) {
  if (!parallel) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Criterion finish(int id, std::string name, bool ok, json measured, const Stopwatch& clock, double budget) {
  Criterion c;
  c.id = id;
  c.name = std::move(name);
  c.seconds = clock.seconds();
  c.budget_seconds = budget;
  c.measured = std::move(measured);
  c.pass = ok && (budget <= 0 || c.seconds < budget);
  return c;
}

// Instances shared by criteria 1, 3 and 9.
std::vector<Instance> oracle_instances(std::uint64_t seed) {
  Rng rng(stream_seed(seed, 1));
  std::vector<Instance> out;
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(2, 9));
    const auto k = static_cast<std::size_t>(rng.between(1, 4));
    out.push_back(gen_random(n, k, rng));
  }
  return out;
}

std::vector<Criterion> suite_oracle(const SuiteOptions& opt) {
  const auto instances = oracle_instances(opt.seed);
  std::vector<Criterion> out;

  {
    Stopwatch clock;
    std::vector<char> bad(instances.size(), 0);
    std::vector<char> k1_checked(instances.size(), 0);
    for_each_index(instances.size(), opt.parallel, [&](std::size_t i) {
      const Instance& inst = instances[i];
      const auto brute = brute_force_opt(inst);
      const auto exact = solve_lfs_exact(inst);
      bool ok = exact.size == brute.size && is_feasible(inst, exact.witness) && is_feasible(inst, brute.witness);
      if (inst.k() == 1) {
        const auto k1 = solve_lfs_k1(inst);
        ok = ok && k1.size == brute.size && is_feasible(inst, k1.witness);
        k1_checked[i] = 1;
      }
      bad[i] = !ok;
    });
    const auto mismatches = std::count(bad.begin(), bad.end(), 1);
    out.push_back(finish(1, "oracle-equivalence", mismatches == 0,
                         {{"instances", instances.size()},
                          {"k1_instances", std::count(k1_checked.begin(), k1_checked.end(), 1)},
                          {"mismatches", mismatches}},
                         clock, 60.0));
  }

  {
    Stopwatch clock;
    std::vector<long> answer_errors(instances.size(), 0);
    std::vector<long> node_errors(instances.size(), 0);
    std::vector<long> queries(instances.size(), 0);
    for_each_index(instances.size(), opt.parallel, [&](std::size_t i) {
      const Instance& inst = instances[i];
      const std::size_t opt_u = inst.n() - brute_force_opt(inst).size;
      for (std::size_t l = 0; l <= inst.n(); ++l) {
        const auto d = decide_ud_fpt(inst, static_cast<long long>(l));
        ++queries[i];
        bool ok = d.answer == (opt_u <= l);
        if (d.answer) ok = ok && d.removed.size() <= l && is_feasible(inst, dual_complement(inst, d.removed));
        answer_errors[i] += !ok;
        node_errors[i] += d.node_count > (std::uint64_t{1} << (l + 1));
      }
    });
    auto sum = [](const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
    out.push_back(finish(9, "fpt-decision", sum(answer_errors) == 0 && sum(node_errors) == 0,
                         {{"instances", instances.size()},
                          {"queries", sum(queries)},
                          {"answer_errors", sum(answer_errors)},
                          {"node_bound_violations", sum(node_errors)}},
                         clock, 0));
  }
  return out;
}

std::vector<Criterion> suite_approx(const SuiteOptions& opt) {
  const auto instances = oracle_instances(opt.seed);
  Stopwatch clock;
  std::vector<char> bad(instances.size(), 0);
  std::vector<double> ratio(instances.size(), 1.0);
  for_each_index(instances.size(), opt.parallel, [&](std::size_t i) {
    const Instance& inst = instances[i];
    const std::size_t opt_u = inst.n() - brute_force_opt(inst).size;
    const auto approx = approx_u(inst);
    const bool feasible = is_feasible(inst, dual_complement(inst, approx.witness));
    bad[i] = !(feasible && opt_u <= approx.size && approx.size <= 2 * opt_u);
    if (opt_u > 0) ratio[i] = static_cast<double>(approx.size) / static_cast<double>(opt_u);
  });
  const auto violations = std::count(bad.begin(), bad.end(), 1);
  return {finish(3, "approximation-sandwich", violations == 0,
                 {{"instances", instances.size()},
                  {"violations", violations},
                  {"max_ratio", *std::max_element(ratio.begin(), ratio.end())}},
                 clock, 0)};
}

std::vector<Criterion> suite_bdj(const SuiteOptions& opt) {
  constexpr std::size_t kN = 400;
  constexpr std::size_t kSamples = 300;
  constexpr double kTolerance = 0.05;
  Stopwatch clock;
  Rng rng(stream_seed(opt.seed, 2));
  std::vector<Instance> samples;
  for (std::size_t i = 0; i < kSamples; ++i) samples.push_back(gen_random(kN, 1, rng));
  std::vector<std::size_t> sizes(kSamples, 0);
  for_each_index(kSamples, opt.parallel, [&](std::size_t i) { sizes[i] = solve_lfs_k1(samples[i]).size; });
  const double mean =
      static_cast<double>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0})) / static_cast<double>(kSamples);
  const double n = static_cast<double>(kN);
  const double target = 2.0 * std::sqrt(n) - 1.77108 * std::pow(n, 1.0 / 6.0);
  const double rel = std::abs(mean - target) / target;
  return {finish(2, "bdj-mean", rel <= kTolerance,
                 {{"n", kN}, {"samples", kSamples}, {"mean", mean}, {"target", target},
                  {"relative_error", rel}, {"tolerance", kTolerance}},
                 clock, 30.0)};
}

std::vector<Criterion> suite_sat(const SuiteOptions& opt) {
  Stopwatch clock;
  Rng rng(stream_seed(opt.seed, 4));
  std::vector<CnfFormula> formulas;
  for (int i = 0; i < 100; ++i) {
    const int vars = static_cast<int>(rng.between(1, 5));
    const auto clauses = static_cast<std::size_t>(rng.between(1, 6));
    formulas.push_back(random_cnf(vars, clauses, rng));
  }
  struct Row {
    bool sat = false;
    bool equivalence = false;
    bool bounded = false;
    bool decode_ok = true;
    std::size_t optimal_witnesses = 0;
  };
  std::vector<Row> rows(formulas.size());
  for_each_index(formulas.size(), opt.parallel, [&](std::size_t i) {
    const CnfFormula& phi = formulas[i];
    const auto red = sat_to_2lfs(phi);
    const std::size_t m = phi.clauses.size();
    const auto best = brute_force_opt(red.instance);
    Row& row = rows[i];
    row.sat = oracle::satisfiable(phi);
    row.equivalence = row.sat == (best.size == m);
    row.bounded = best.size <= m;
    oracle::for_each_feasible_set(red.instance, [&](const FeasibleSet& fixed) {
      if (fixed.size() != best.size) return;
      ++row.optimal_witnesses;
      try {
        const auto decoded = decode_assignment(red.table, fixed);
        row.decode_ok = row.decode_ok && decoded.satisfied >= fixed.size() &&
                        count_satisfied(phi, decoded.values) == decoded.satisfied;
      } catch (const Error&) {
        row.decode_ok = false;
      }
    });
  });
  long satisfiable = 0, equivalence_errors = 0, bound_errors = 0, decode_errors = 0, witnesses = 0;
  for (const Row& r : rows) {
    satisfiable += r.sat;
    equivalence_errors += !r.equivalence;
    bound_errors += !r.bounded;
    decode_errors += !r.decode_ok;
    witnesses += static_cast<long>(r.optimal_witnesses);
  }
  return {finish(4, "sat-reduction", equivalence_errors == 0 && bound_errors == 0 && decode_errors == 0,
                 {{"formulas", formulas.size()}, {"satisfiable", satisfiable},
                  {"equivalence_errors", equivalence_errors}, {"bound_errors", bound_errors},
                  {"optimal_witnesses", witnesses}, {"decode_errors", decode_errors}},
                 clock, 60.0)};
}

std::vector<Criterion> suite_graph(const SuiteOptions& opt) {
  Stopwatch clock;
  Rng rng(stream_seed(opt.seed, 5));
  std::vector<Graph> graphs;
  for (int i = 0; i < 100; ++i) graphs.push_back(random_graph(static_cast<std::size_t>(rng.between(1, 8)), 0.5, rng));
  std::vector<char> size_bad(graphs.size(), 0);
  std::vector<char> clique_bad(graphs.size(), 0);
  for_each_index(graphs.size(), opt.parallel, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const Instance inst = graph_to_nlfs(g);
    const auto best = brute_force_opt(inst);
    size_bad[i] = best.size != oracle::clique_number(g);
    oracle::for_each_feasible_set(inst, [&](const FeasibleSet& set) {
      if (set.size() == best.size && !is_clique(g, set)) clique_bad[i] = 1;
    });
  });
  const auto size_errors = std::count(size_bad.begin(), size_bad.end(), 1);
  const auto clique_errors = std::count(clique_bad.begin(), clique_bad.end(), 1);
  return {finish(5, "graph-reduction", size_errors == 0 && clique_errors == 0,
                 {{"graphs", graphs.size()}, {"size_errors", size_errors}, {"non_clique_witnesses", clique_errors}},
                 clock, 0)};
}

std::vector<Criterion> suite_power(const SuiteOptions& opt) {
  constexpr std::size_t kNu = 3;
  constexpr int kLevel = 2;
  Stopwatch clock;
  Rng rng(stream_seed(opt.seed, 6));
  std::vector<Instance> bases;
  for (int i = 0; i < 20; ++i) bases.push_back(gen_random(kNu, kNu, rng));
  struct Row {
    bool square = false;
    bool lift_ok = false;
    std::size_t sets = 0;
    std::size_t extract_errors = 0;
  };
  std::vector<Row> rows(bases.size());
  for_each_index(bases.size(), opt.parallel, [&](std::size_t i) {
    const Instance& base = bases[i];
    const auto pinst = power_construct(base, kLevel);
    const auto base_best = brute_force_opt(base);
    const auto lifted_best = brute_force_opt(pinst.lifted());
    Row& row = rows[i];
    row.square = lifted_best.size == base_best.size * base_best.size;
    const auto lifted = lift_solution(base_best.witness, base_best.witness, kLevel, kNu);
    row.lift_ok = is_feasible(pinst.lifted(), lifted) && lifted.size() == base_best.size * base_best.size;
    oracle::for_each_feasible_set(pinst.lifted(), [&](const FeasibleSet& J) {
      ++row.sets;
      const auto got = extract_lfs(pinst, kLevel, J);
      if (!is_feasible(base, got) || got.size() * got.size() < J.size()) ++row.extract_errors;
    });
  });
  long square_errors = 0, lift_errors = 0, sets = 0, extract_errors = 0;
  for (const Row& r : rows) {
    square_errors += !r.square;
    lift_errors += !r.lift_ok;
    sets += static_cast<long>(r.sets);
    extract_errors += static_cast<long>(r.extract_errors);
  }
  return {finish(6, "power-construction", square_errors == 0 && lift_errors == 0 && extract_errors == 0,
                 {{"bases", bases.size()}, {"nu", kNu}, {"c", kLevel}, {"square_errors", square_errors},
                  {"lift_errors", lift_errors}, {"extracted_sets", sets}, {"extract_errors", extract_errors}},
                 clock, 120.0)};
}

Criterion figure1_criterion(const SuiteOptions& opt) {
  Stopwatch clock;
  const Instance inst =
      opt.figure1.empty() ? io::instance_from_json(figure1_json()) : io::read_instance(opt.figure1);
  const auto dist = ulam_distance(inst);
  const auto path = reconstruct_path(inst, dist.fixed);
  std::vector<Label> moved;
  for (const auto& mv : path.moves) moved.push_back(mv.element);

  const std::filesystem::path scratch =
      opt.scratch_dir.empty() ? std::filesystem::temp_directory_path() / ("ulamk-figure1-" + std::to_string(::getpid()))
                              : opt.scratch_dir;
  const RectSpec rects = RectSpec::unit(inst.n());
  const auto first = render_frames(inst, path, rects, scratch / "a");
  const auto second = render_frames(inst, path, rects, scratch / "b");
  bool identical = first == second;
  for (const auto& name : first) {
    identical = identical && io::read_text_file(scratch / "a" / name) == io::read_text_file(scratch / "b" / name);
  }
  std::error_code ec;
  if (opt.scratch_dir.empty()) std::filesystem::remove_all(scratch, ec);

  const bool ok = dist.distance == 2 && dist.removed == FeasibleSet{4, 5} && static_cast<bool>(verify_path(inst, path)) &&
                  moved == std::vector<Label>{5, 4} && first.size() == 3 && identical;
  return finish(10, "figure1-reproduction", ok,
                {{"distance", dist.distance}, {"removed", io::to_json(dist.removed)},
                 {"moves", io::moves_to_json(path)}, {"frames", first.size()}, {"byte_identical", identical}},
                clock, 0);
}

std::vector<Criterion> suite_path(const SuiteOptions& opt) {
  std::vector<Criterion> out;
  {
    Stopwatch clock;
    Rng rng(stream_seed(opt.seed, 7));
    std::vector<Instance> instances;
    for (int i = 0; i < 200; ++i) {
      const auto n = static_cast<std::size_t>(rng.between(2, 8));
      const auto k = static_cast<std::size_t>(rng.between(1, 3));
      instances.push_back(gen_random(n, k, rng));
    }
    std::vector<char> bad(instances.size(), 0);
    for_each_index(instances.size(), opt.parallel, [&](std::size_t i) {
      const Instance& inst = instances[i];
      const auto exact = solve_lfs_exact(inst);
      const auto path = reconstruct_path(inst, exact.witness);
      const auto dist = ulam_distance(inst);
      bool ok = static_cast<bool>(verify_path(inst, path)) && path.length() == dist.distance &&
                dist.distance == inst.n() - exact.witness.size();
      const auto frames = path_frames(path);
      for (std::size_t f = 1; f < frames.size() && ok; ++f) ok = is_neighbor(frames[f - 1], frames[f]);
      bad[i] = !ok;
    });
    const auto failures = std::count(bad.begin(), bad.end(), 1);
    out.push_back(finish(7, "path-realization", failures == 0, {{"instances", instances.size()}, {"failures", failures}},
                         clock, 0));
  }
  out.push_back(figure1_criterion(opt));
  return out;
}

std::vector<Criterion> suite_metric(const SuiteOptions& opt) {
  Stopwatch clock;
  Rng rng(stream_seed(opt.seed, 8));
  struct Triple {
    PermutationTuple a, b, c;
  };
  auto tuple = [&](std::size_t n, std::size_t k) {
    std::vector<Permutation> dims;
    for (std::size_t r = 0; r < k; ++r) dims.push_back(rng.permutation(n));
    return PermutationTuple(std::move(dims));
  };
  std::vector<Triple> triples;
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(2, 6));
    const auto k = static_cast<std::size_t>(rng.between(1, 3));
    Triple t{tuple(n, k), tuple(n, k), tuple(n, k)};
    triples.push_back(std::move(t));
  }
  std::vector<int> identity_bad(triples.size(), 0), symmetry_bad(triples.size(), 0), triangle_bad(triples.size(), 0);
  for_each_index(triples.size(), opt.parallel, [&](std::size_t i) {
    const PermutationTuple* pts[3] = {&triples[i].a, &triples[i].b, &triples[i].c};
    std::size_t d[3][3];
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) d[x][y] = oracle::distance(*pts[x], *pts[y]);
    for (int x = 0; x < 3; ++x) {
      identity_bad[i] += d[x][x] != 0;
      for (int y = 0; y < 3; ++y) {
        symmetry_bad[i] += d[x][y] != d[y][x];
        if (x != y) identity_bad[i] += (d[x][y] == 0) != (*pts[x] == *pts[y]);
        for (int z = 0; z < 3; ++z) triangle_bad[i] += d[x][z] > d[x][y] + d[y][z];
      }
    }
  });
  auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  return {finish(8, "metric-axioms", sum(identity_bad) == 0 && sum(symmetry_bad) == 0 && sum(triangle_bad) == 0,
                 {{"triples", triples.size()}, {"identity_violations", sum(identity_bad)},
                  {"symmetry_violations", sum(symmetry_bad)}, {"triangle_violations", sum(triangle_bad)}},
                 clock, 0)};
}

using SuiteFn = std::vector<Criterion> (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites = {
      {"oracle", suite_oracle}, {"bdj", suite_bdj},     {"approx", suite_approx}, {"sat", suite_sat},
      {"graph", suite_graph},   {"power", suite_power}, {"path", suite_path},     {"metric", suite_metric},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle", "bdj", "approx", "sat", "graph", "power", "path", "metric"};
  return names;
}

std::vector<Criterion> run_suite(std::string_view name, const SuiteOptions& options) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw Error(Errc::UnknownSuite, "no suite named \"" + std::string(name) + "\"");
  return it->second(options);
}

std::vector<Criterion> run_all_suites(const SuiteOptions& options) {
  std::vector<Criterion> all;
  for (const auto& name : suite_names()) {
    auto part = run_suite(name, options);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  return all;
}

nlohmann::json to_json(const Criterion& c) {
  json j;
  j["id"] = c.id;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["measured"] = c.measured;
  if (c.budget_seconds > 0) j["within_budget"] = c.seconds < c.budget_seconds;
  return j;
}

std::string summary_line(const Criterion& c) {
  char timing[64];
  if (c.budget_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs budget", c.seconds, c.budget_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", c.seconds);
  }
  return std::string(c.pass ? "[PASS] " : "[FAIL] ") + std::to_string(c.id) + " " + c.name + " " + c.measured.dump() +
         " (" + timing + ")";
}

nlohmann::json figure1_json() {
  return json::parse(R"({"n":6,"k":2,"s":[[4,3,1,6,2,5],[6,5,3,4,1,2]],"t":[[5,3,1,4,6,2],[6,3,5,1,2,4]]})");
}

}  // namespace ulamk
