#pragma once

#include <cstddef>
#include <cstdint>

#include "ulamk/core.hpp"

namespace ulamk {

struct SolveResult {
  FeasibleSet witness;
  std::size_t size = 0;
  bool optimal = false;
  std::uint64_t node_count = 0;
};

struct UlamResult {
  std::size_t distance = 0;
  FeasibleSet removed;
  FeasibleSet fixed;
};

struct DecideResult {
  bool answer = false;
  std::uint64_t node_count = 0;
  /// A kU-feasible set of size <= l when `answer` holds.
  FeasibleSet removed;
};

inline constexpr std::size_t kBruteForceLimit = 24;

/// Exhaustive search over subsets in lexicographic order with hereditary
/// pruning. Returns the lexicographically smallest maximum feasible set.
/// Throws TooLarge above kBruteForceLimit. Serves as the oracle for the other
/// solvers, so it deliberately avoids the agreement graph.
SolveResult brute_force_opt(const Instance& inst);
/// Same result as brute_force_opt(); the first few include/exclude decisions
/// are fanned out over OpenMP threads. node_count is the sum over tasks and
/// is not comparable to the serial count.
SolveResult brute_force_opt_parallel(const Instance& inst);

struct CliqueResult {
  FeasibleSet clique;
  std::uint64_t node_count = 0;
};

/// Branch-and-bound maximum clique with a greedy-coloring bound (coloring
/// order: descending degree, ties by label). Branches in ascending label
/// order and only accepts strictly larger incumbents, so the result is the
/// lexicographically smallest maximum clique.
CliqueResult max_clique(const Graph& g);

/// Max clique of the agreement graph.
SolveResult solve_lfs_exact(const Instance& inst);

/// k = 1 only: longest increasing subsequence of pos_t(sigma_s(1..n)) by
/// patience sorting, O(n log n). Throws WrongDimension otherwise.
SolveResult solve_lfs_k1(const Instance& inst);

/// Maximal matching over conflict_edges() in lexicographic order; the matched
/// endpoints form a kU-feasible set of size at most twice the optimum.
SolveResult approx_u(const Instance& inst);

/// Bounded search tree: is there a kU-feasible set of size <= l? Branches on
/// the endpoints of the first remaining conflict pair, so at most 2^{l+1} - 1
/// nodes. Exact size l is equivalent since kU-feasibility is upward closed.
DecideResult decide_ud_fpt(const Instance& inst, long long l);

UlamResult ulam_distance(const Instance& inst);

}  // namespace ulamk
