#include "ulamk/oracles.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "ulamk/solvers.hpp"

namespace ulamk::oracle {

bool satisfiable(const CnfFormula& phi) {
  if (phi.var_count > 20) throw Error(Errc::TooLarge, "truth table limited to 20 variables");
  const std::uint32_t rows = std::uint32_t{1} << phi.var_count;
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    bool all = true;
    for (const auto& clause : phi.clauses) {
      bool sat = false;
      for (const Literal& lit : clause) {
        const bool value = (bits >> (lit.var - 1)) & 1U;
        sat = sat || value != lit.neg;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 20) throw Error(Errc::TooLarge, "clique enumeration limited to 20 vertices");
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t u = 0; u < n && clique; ++u) {
      if (!((mask >> u) & 1U)) continue;
      for (std::size_t v = u + 1; v < n && clique; ++v) {
        if ((mask >> v) & 1U) clique = g.adjacent(static_cast<Label>(u + 1), static_cast<Label>(v + 1));
      }
    }
    if (clique) best = size;
  }
  return best;
}

namespace {

void extend(const Instance& inst, std::vector<Label>& chosen, Label next,
            const std::function<void(const FeasibleSet&)>& visit) {
  visit(FeasibleSet(chosen));
  for (Label v = next; v <= static_cast<Label>(inst.n()); ++v) {
    chosen.push_back(v);
    if (is_feasible(inst, FeasibleSet(chosen))) extend(inst, chosen, v + 1, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_feasible_set(const Instance& inst, const std::function<void(const FeasibleSet&)>& visit) {
  std::vector<Label> chosen;
  extend(inst, chosen, 1, visit);
}

std::size_t distance(const PermutationTuple& a, const PermutationTuple& b) {
  return a.n() - brute_force_opt(Instance(a, b)).size;
}

}  // namespace ulamk::oracle
