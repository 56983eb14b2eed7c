#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ulamk/oracles.hpp"
#include "ulamk/random.hpp"
#include "ulamk/reductions.hpp"
#include "ulamk/solvers.hpp"

using namespace ulamk;
using ulamk::test::code_of;
using ulamk::test::figure1;
using ulamk::test::identity_pair;
using ulamk::test::make;

namespace {

CnfFormula two_clause_formula() {
  // (x1 v x2 v -x3) ^ (-x1 v x2 v x3)
  CnfFormula phi;
  phi.var_count = 3;
  phi.clauses.push_back({Literal{1, false}, Literal{2, false}, Literal{3, true}});
  phi.clauses.push_back({Literal{1, true}, Literal{2, false}, Literal{3, false}});
  return phi;
}

CnfFormula one_clause_formula() {
  CnfFormula phi;
  phi.var_count = 3;
  phi.clauses.push_back({Literal{1, false}, Literal{2, false}, Literal{3, false}});
  return phi;
}

Instance square_base() { return make({{1, 2}, {1, 2}}, {{1, 2}, {2, 1}}); }

std::vector<Label> seq(std::initializer_list<Label> xs) { return xs; }

std::vector<Label> labels(const Permutation& p) { return {p.begin(), p.end()}; }

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("symbol table numbering") {
  const SymbolTable table(two_clause_formula());
  REQUIRE(table.size() == 6);
  CHECK(table.symbol(1) == Symbol{1, 1, false, 1});
  CHECK(table.symbol(2) == Symbol{2, 1, true, 1});
  CHECK(table.symbol(3) == Symbol{3, 2, false, 1});
  CHECK(table.symbol(4) == Symbol{4, 2, false, 2});
  CHECK(table.symbol(5) == Symbol{5, 3, false, 1});
  CHECK(table.symbol(6) == Symbol{6, 3, true, 1});
  CHECK(table.clause_symbols(0) == std::array<Label, 3>{1, 3, 6});
  CHECK(table.clause_symbols(1) == std::array<Label, 3>{2, 4, 5});
}

TEST_CASE("sat_to_2lfs on the two-clause formula") {
  const auto red = sat_to_2lfs(two_clause_formula());
  const Instance& inst = red.instance;
  CHECK(inst.n() == 6);
  CHECK(inst.k() == 2);
  CHECK(labels(inst.source()[0]) == seq({1, 2, 3, 4, 5, 6}));
  CHECK(labels(inst.target()[0]) == seq({2, 1, 3, 4, 6, 5}));
  CHECK(labels(inst.source()[1]) == seq({1, 3, 6, 2, 4, 5}));
  CHECK(labels(inst.target()[1]) == seq({6, 3, 1, 5, 4, 2}));
  CHECK(brute_force_opt(inst).size == 2);
}

TEST_CASE("sat_to_2lfs single clause") {
  const auto red = sat_to_2lfs(one_clause_formula());
  CHECK(labels(red.instance.source()[0]) == seq({1, 2, 3}));
  CHECK(labels(red.instance.target()[0]) == seq({1, 2, 3}));
  CHECK(labels(red.instance.source()[1]) == seq({1, 2, 3}));
  CHECK(labels(red.instance.target()[1]) == seq({3, 2, 1}));
  CHECK(brute_force_opt(red.instance).size == 1);
}

TEST_CASE("sat_to_2lfs rejects malformed formulas") {
  CnfFormula bad = one_clause_formula();
  bad.clauses[0][1].var = 4;
  CHECK(code_of([&] { sat_to_2lfs(bad); }) == Errc::MalformedClause);
  CnfFormula empty;
  empty.var_count = 2;
  CHECK(code_of([&] { sat_to_2lfs(empty); }) == Errc::MalformedClause);
}

TEST_CASE("duplicate literals get their own symbols") {
  CnfFormula phi;
  phi.var_count = 1;
  phi.clauses.push_back({Literal{1, false}, Literal{1, false}, Literal{1, true}});
  const auto red = sat_to_2lfs(phi);
  CHECK(red.instance.n() == 3);
  CHECK(brute_force_opt(red.instance).size == 1);
}

TEST_CASE("decode_assignment frozen values") {
  const auto phi = two_clause_formula();
  const SymbolTable table(phi);
  const auto d = decode_assignment(table, FeasibleSet{3, 4});
  CHECK(d.values[2] == std::optional<bool>(true));
  CHECK_FALSE(d.values[1].has_value());
  CHECK(d.satisfied == 2);
  CHECK(decode_assignment(table, FeasibleSet{}).satisfied == 0);
  CHECK(code_of([&] { decode_assignment(table, FeasibleSet{1, 2}); }) == Errc::Inconsistent);
  CHECK(code_of([&] { decode_assignment(table, FeasibleSet{7}); }) == Errc::OutOfRange);

  const SymbolTable single(one_clause_formula());
  const auto s = decode_assignment(single, FeasibleSet{1});
  CHECK(s.values[1] == std::optional<bool>(true));
  CHECK(s.satisfied == 1);
}

TEST_CASE("SAT reduction soundness on random small formulas") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int vars = static_cast<int>(rng.between(1, 5));
    const auto m = static_cast<std::size_t>(rng.between(1, 6));
    const CnfFormula phi = random_cnf(vars, m, rng);
    const auto red = sat_to_2lfs(phi);
    const auto opt = brute_force_opt(red.instance);
    CHECK(opt.size <= m);
    CHECK((opt.size == m) == oracle::satisfiable(phi));
    oracle::for_each_feasible_set(red.instance, [&](const FeasibleSet& fixed) {
      const auto d = decode_assignment(red.table, fixed);
      CHECK(d.satisfied >= fixed.size());
      CHECK(count_satisfied(phi, d.values) == d.satisfied);
    });
  }
}

TEST_CASE("graph_to_nlfs on the path 1-2") {
  Graph g(3);
  g.add_edge(1, 2);
  const Instance inst = graph_to_nlfs(g);
  CHECK(inst.k() == 3);
  CHECK(labels(inst.source()[0]) == seq({1, 3, 2}));
  CHECK(labels(inst.target()[0]) == seq({3, 1, 2}));
  CHECK(labels(inst.source()[1]) == seq({2, 3, 1}));
  CHECK(labels(inst.target()[1]) == seq({3, 2, 1}));
  CHECK(labels(inst.source()[2]) == seq({3, 1, 2}));
  CHECK(labels(inst.target()[2]) == seq({1, 2, 3}));
  CHECK(brute_force_opt(inst).size == 2);
}

TEST_CASE("graph_to_nlfs empty graph and triangle") {
  CHECK(brute_force_opt(graph_to_nlfs(Graph(3))).size == 1);
  Graph k3(3);
  k3.add_edge(1, 2);
  k3.add_edge(2, 3);
  k3.add_edge(1, 3);
  CHECK(brute_force_opt(graph_to_nlfs(k3)).size == 3);
}

TEST_CASE("graph reduction feasible sets are cliques") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 8));
    const Graph g = random_graph(n, 0.5, rng);
    const Instance inst = graph_to_nlfs(g);
    const auto opt = brute_force_opt(inst);
    CHECK(opt.size == oracle::clique_number(g));
    CHECK(is_clique(g, opt.witness));
    oracle::for_each_feasible_set(inst, [&](const FeasibleSet& s) { CHECK(is_clique(g, s)); });
  }
}

TEST_CASE("power_construct frozen values") {
  const auto p = power_construct(square_base(), 2);
  CHECK(p.level() == 2);
  CHECK(p.nu() == 2);
  const Instance& L = p.lifted();
  CHECK(labels(L.source()[0]) == seq({1, 2, 3, 4}));
  CHECK(labels(L.source()[1]) == seq({1, 2, 3, 4}));
  CHECK(labels(L.target()[0]) == seq({1, 2, 3, 4}));
  CHECK(labels(L.target()[1]) == seq({4, 3, 2, 1}));
  CHECK(brute_force_opt(L).size == 1);
  CHECK(brute_force_opt(square_base()).size == 1);

  CHECK(power_construct(square_base(), 1).lifted() == square_base());

  const auto id = power_construct(identity_pair(3, 3), 2);
  CHECK(id.lifted().source() == id.lifted().target());
  CHECK(brute_force_opt(id.lifted()).size == 9);
}

TEST_CASE("power_construct guards") {
  CHECK(code_of([] { power_construct(figure1(), 2); }) == Errc::NotSquare);
  CHECK(code_of([] { power_construct(identity_pair(3, 3), 20); }) == Errc::LevelTooLarge);
  CHECK(code_of([] { power_construct(identity_pair(3, 3), 3, 26); }) == Errc::LevelTooLarge);
  CHECK(code_of([] { power_construct(identity_pair(2, 2), 0); }) == Errc::OutOfRange);
  CHECK(code_of([] { u_power_construct(figure1(), 2); }) == Errc::NotSquare);
  CHECK(checked_power(3, 3, 27) == std::optional<std::size_t>(27));
  CHECK_FALSE(checked_power(3, 3, 26).has_value());
  CHECK_FALSE(checked_power(1000, 10, kPowerElementCap).has_value());
}

TEST_CASE("lift_solution frozen values") {
  CHECK(lift_solution(FeasibleSet{1}, FeasibleSet{1}, 2, 2) == FeasibleSet{1});
  CHECK(lift_solution(FeasibleSet{1, 2}, FeasibleSet{1, 2, 3}, 2, 3) == FeasibleSet{1, 2, 3, 4, 5, 6});
  CHECK(lift_solution(FeasibleSet{}, FeasibleSet{1, 2}, 2, 3).empty());
}

TEST_CASE("block_maps frozen values") {
  auto bm = block_maps(5, 1, 3);
  CHECK(bm.block == 2);
  CHECK(bm.inblock == 2);
  bm = block_maps(1, 3, 2);
  CHECK(bm.block == 1);
  CHECK(bm.inblock == 1);
  bm = block_maps(9, 1, 3);
  CHECK(bm.block == 3);
  CHECK(bm.inblock == 3);
  CHECK(code_of([] { block_maps(0, 1, 3); }) == Errc::OutOfRange);
  CHECK(code_of([] { block_maps(10, 1, 3); }) == Errc::OutOfRange);
}

TEST_CASE("partition_stats frozen values") {
  auto ps = partition_stats(FeasibleSet{1, 5, 9}, 2, 3);
  CHECK(ps.hit_blocks == std::vector<std::size_t>{1, 2, 3});
  CHECK(ps.per_block[0] == FeasibleSet{1});
  CHECK(ps.per_block[1] == FeasibleSet{2});
  CHECK(ps.per_block[2] == FeasibleSet{3});
  CHECK(ps.alpha == 1);
  CHECK(ps.beta == 3);

  ps = partition_stats(FeasibleSet{}, 2, 3);
  CHECK(ps.hit_blocks.empty());
  CHECK(ps.alpha == 0);

  ps = partition_stats(FeasibleSet{1, 2, 3}, 2, 2);
  CHECK(ps.hit_blocks == std::vector<std::size_t>{1, 2});
  CHECK(ps.per_block[0] == FeasibleSet{1, 2});
  CHECK(ps.per_block[1] == FeasibleSet{1});
  CHECK(ps.alpha == 2);
  CHECK(ps.beta == 1);
}

TEST_CASE("extract_lfs frozen values") {
  const auto p = power_construct(square_base(), 2);
  CHECK(extract_lfs(p, 2, FeasibleSet{1}) == FeasibleSet{1});
  CHECK(extract_lfs(p, 2, FeasibleSet{}).empty());
  CHECK(code_of([&] { extract_lfs(p, 2, FeasibleSet{1, 2, 3, 4}); }) == Errc::NotFeasible);

  const auto id = power_construct(identity_pair(3, 3), 2);
  const auto got = extract_lfs(id, 2, FeasibleSet::all(9));
  CHECK(got.size() >= 3);
  CHECK(is_feasible(id.base(), got));

  CHECK(extract_lfs(power_construct(square_base(), 1), 1, FeasibleSet{2}) == FeasibleSet{2});
}

TEST_CASE("power construction squares the optimum (nu=3, c=2)") {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance base = gen_random(3, 3, rng);
    const auto p = power_construct(base, 2);
    const auto b = brute_force_opt(base);
    const auto l = brute_force_opt(p.lifted());
    CHECK(l.size == b.size * b.size);
    const auto lifted = lift_solution(b.witness, b.witness, 2, 3);
    CHECK(lifted.size() == b.size * b.size);
    CHECK(is_feasible(p.lifted(), lifted));
    oracle::for_each_feasible_set(p.lifted(), [&](const FeasibleSet& J) {
      const auto got = extract_lfs(p, 2, J);
      CHECK(is_feasible(base, got));
      CHECK(got.size() * got.size() >= J.size());
    });
  }
}

TEST_CASE("extract_lfs at level 3 (nu=2)") {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance base = gen_random(2, 2, rng);
    const auto p = power_construct(base, 3);
    CHECK(p.lifted().n() == 8);
    const auto b = brute_force_opt(base);
    CHECK(brute_force_opt(p.lifted()).size == ipow(b.size, 3));
    oracle::for_each_feasible_set(p.lifted(), [&](const FeasibleSet& J) {
      const auto got = extract_lfs(p, 3, J);
      CHECK(is_feasible(base, got));
      CHECK(ipow(got.size(), 3) >= J.size());
    });
  }
}

TEST_CASE("u_power_construct frozen values") {
  const Instance base = make({{2, 1}, {1, 2}}, {{1, 2}, {1, 2}});
  const Instance u = u_power_construct(base, 2);
  CHECK(u.n() == 4);
  CHECK(labels(u.source()[0]) == seq({2, 1, 4, 3}));
  CHECK(labels(u.source()[1]) == seq({1, 2, 3, 4}));
  const Instance id = u_power_construct(identity_pair(2, 2), 2);
  CHECK(id.source() == id.target());
}

TEST_CASE("u_extract frozen values") {
  const Instance id = u_power_construct(identity_pair(2, 2), 2);
  CHECK(u_extract(id, FeasibleSet{}, 2, 2).empty());
  CHECK(u_extract(id, FeasibleSet{1, 3}, 2, 2) == FeasibleSet{1});

  // Base with a single conflict {1,2}: every kU set hits both copies.
  const Instance base = make({{1, 2}, {1, 2}}, {{2, 1}, {1, 2}});
  const Instance lifted = u_power_construct(base, 2);
  CHECK(u_extract(lifted, FeasibleSet{1, 3}, 2, 2) == FeasibleSet{1});
  CHECK(u_extract(lifted, FeasibleSet{1, 2, 4}, 2, 2) == FeasibleSet{2});
  CHECK(code_of([&] { u_extract(lifted, FeasibleSet{1}, 2, 2); }) == Errc::NotFeasible);
  CHECK(code_of([&] { u_extract(lifted, FeasibleSet{1, 3}, 3, 2); }) == Errc::ShapeMismatch);
}

TEST_CASE("u_extract returns base kU sets") {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance base = gen_random(3, 3, rng);
    const Instance lifted = u_power_construct(base, 2);
    oracle::for_each_feasible_set(lifted, [&](const FeasibleSet& fixed) {
      const FeasibleSet J = dual_complement(lifted, fixed);
      const auto got = u_extract(lifted, J, 3, 2);
      CHECK(is_feasible(base, dual_complement(base, got)));
      CHECK(got.size() * 3 <= J.size());
    });
  }
}

TEST_CASE("pad_dimensions keeps the feasible family") {
  const Instance padded = pad_dimensions(figure1(), 4);
  CHECK(padded.k() == 4);
  CHECK(brute_force_opt(padded).size == 4);
  CHECK(pad_dimensions(identity_pair(3), 1) == identity_pair(3));
  CHECK(brute_force_opt(pad_dimensions(identity_pair(5), 3)).size == 5);
  CHECK(code_of([] { pad_dimensions(figure1(), 1); }) == Errc::ShrinkNotAllowed);
}
