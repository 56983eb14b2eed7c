#pragma once

// Instance generators for the hardness constructions: 3SAT -> 2LFS,
// graph -> nLFS, the power tower T^c with its extraction procedure, and the
// shifted-copy construction for kU.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ulamk/core.hpp"

namespace ulamk {

struct Literal {
  int var = 0;  // 1-based
  bool neg = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  int var_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// One literal occurrence: symbol `id` stands for the `occ`-th positive (or
/// negative) occurrence of variable `var`.
struct Symbol {
  Label id = 0;
  int var = 0;
  bool neg = false;
  int occ = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Bijection between literal occurrences and [3m]. Numbering: variables
/// ascending; per variable, positive occurrences in clause order, then
/// negative ones.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(const CnfFormula& phi);

  std::size_t size() const noexcept { return symbols_.size(); }
  /// Indexed by id - 1.
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& symbol(Label id) const { return symbols_.at(static_cast<std::size_t>(id - 1)); }
  /// Symbol ids of clause j (0-based), in literal order.
  const std::array<Label, 3>& clause_symbols(std::size_t j) const { return clause_symbols_.at(j); }
  std::size_t clause_count() const noexcept { return clause_symbols_.size(); }
  int var_count() const noexcept { return var_count_; }

 private:
  int var_count_ = 0;
  std::vector<Symbol> symbols_;
  std::vector<std::array<Label, 3>> clause_symbols_;
};

struct SatReduction {
  Instance instance;
  SymbolTable table;
};

/// k = 2, n = 3m. Throws MalformedClause on variable indices outside
/// [var_count] or an empty formula.
SatReduction sat_to_2lfs(const CnfFormula& phi);

struct DecodedAssignment {
  /// Index 1..var_count; nullopt where the set says nothing.
  std::vector<std::optional<bool>> values;
  std::size_t satisfied = 0;
};

/// Maps each fixed symbol back to its literal and sets the variable so the
/// literal holds. Throws Inconsistent if two symbols demand opposite values.
DecodedAssignment decode_assignment(const SymbolTable& table, const FeasibleSet& fixed);

/// Clauses of `phi` satisfied by a partial assignment.
std::size_t count_satisfied(const CnfFormula& phi, const std::vector<std::optional<bool>>& values);

/// k = n: sigma_s^i = (i) a_i b_i, sigma_t^i = a_i (i) b_i with a_i the
/// ascending non-neighbours and b_i the ascending neighbours of i.
Instance graph_to_nlfs(const Graph& g);

inline constexpr std::size_t kPowerElementCap = 1'000'000;

/// Tower T^1 .. T^c over a square base (k = n = nu).
class PowerInstance {
 public:
  const Instance& base() const noexcept { return tower_.front(); }
  const Instance& lifted() const noexcept { return tower_.back(); }
  int level() const noexcept { return static_cast<int>(tower_.size()); }
  std::size_t nu() const noexcept { return base().n(); }
  /// T^c for 1 <= c <= level().
  const Instance& at(int c) const { return tower_.at(static_cast<std::size_t>(c - 1)); }

 private:
  friend PowerInstance power_construct(const Instance&, int, std::size_t);
  std::vector<Instance> tower_;
};

/// lambda^i = concatenation, over k in sigma^i order, of tau^i shifted by
/// (k-1) nu^{c-1}. Throws NotSquare if k != n, LevelTooLarge if nu^c > cap,
/// OutOfRange if c < 1.
PowerInstance power_construct(const Instance& base, int c, std::size_t cap = kPowerElementCap);

/// {(j-1) nu^{c-1} + k | j in base_set, k in prev}.
FeasibleSet lift_solution(const FeasibleSet& base_set, const FeasibleSet& prev, int c, std::size_t nu);

struct BlockPosition {
  std::size_t block = 0;
  std::size_t inblock = 0;
};

/// block = (s-1) div nu^level + 1, inblock = (s-1) mod nu^level + 1, for
/// s in [nu^{level+1}].
BlockPosition block_maps(std::size_t s, int level, std::size_t nu);

struct PartitionStats {
  /// Blocks hit by J.
  std::vector<std::size_t> hit_blocks;
  /// per_block[l-1]: sorted inblock images of J within block l, l in [nu].
  std::vector<FeasibleSet> per_block;
  std::size_t alpha = 0;
  std::size_t beta = 0;
};

/// Splits J subset of [nu^level] into nu blocks of width nu^{level-1}. beta is
/// the largest block attaining alpha.
PartitionStats partition_stats(const FeasibleSet& J, int level, std::size_t nu);

/// Recovers a base-feasible set of size >= |J|^{1/c} from a feasible J of T^c.
/// Throws NotFeasible if J is not feasible for T^c.
FeasibleSet extract_lfs(const PowerInstance& pinst, int c, const FeasibleSet& J);

/// nu^{c-1} shifted copies of every base permutation (copy k shifted by
/// (k-1) nu). Throws NotSquare / LevelTooLarge.
Instance u_power_construct(const Instance& base, int c, std::size_t cap = kPowerElementCap);

/// Picks the width-nu block with fewest J members (smallest block on ties)
/// and returns its inblock images, a kU-feasible set for the base. Throws
/// NotFeasible if J is not kU-feasible for `lifted`.
FeasibleSet u_extract(const Instance& lifted, const FeasibleSet& J, std::size_t nu, int c);

/// Appends copies of the last dimension pair until k = k_new.
Instance pad_dimensions(const Instance& inst, std::size_t k_new);

/// nu^c, or nullopt when it would exceed `cap`.
std::optional<std::size_t> checked_power(std::size_t nu, int c, std::size_t cap);

}  // namespace ulamk
