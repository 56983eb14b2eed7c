#pragma once

// Exhaustive checkers used by the acceptance suites. None of them goes
// through the agreement graph or the solvers they are used to check.

#include <cstddef>
#include <functional>

#include "ulamk/core.hpp"
#include "ulamk/reductions.hpp"

namespace ulamk::oracle {

/// Truth-table satisfiability, var_count <= 20.
bool satisfiable(const CnfFormula& phi);

/// Largest clique by enumerating vertex subsets, n <= 20.
std::size_t clique_number(const Graph& g);

/// Calls `visit` once per feasible set (including the empty set), using
/// is_feasible() on every candidate and extending only feasible sets.
void for_each_feasible_set(const Instance& inst, const std::function<void(const FeasibleSet&)>& visit);

/// n minus the largest feasible set, by brute_force_opt().
std::size_t distance(const PermutationTuple& a, const PermutationTuple& b);

}  // namespace ulamk::oracle
