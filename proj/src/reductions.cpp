#include "ulamk/reductions.hpp"

#include <algorithm>
#include <string>

namespace ulamk {

namespace {

void check_square(const Instance& base) {
  if (base.k() != base.n()) {
    throw Error(Errc::NotSquare, "construction needs k == n, got k=" + std::to_string(base.k()) +
                                     ", n=" + std::to_string(base.n()));
  }
}

std::size_t power_or_throw(std::size_t nu, int c, std::size_t cap) {
  if (c < 1) throw Error(Errc::OutOfRange, "level c=" + std::to_string(c) + " must be >= 1");
  auto n = checked_power(nu, c, cap);
  if (!n) {
    throw Error(Errc::LevelTooLarge, std::to_string(nu) + "^" + std::to_string(c) + " exceeds the cap of " +
                                         std::to_string(cap) + " elements");
  }
  return *n;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// alpha^c < bound, without overflow.
bool power_below(std::size_t alpha, int c, std::size_t bound) {
  std::size_t acc = 1;
  for (int i = 0; i < c; ++i) {
    if (alpha != 0 && acc > bound / alpha) return false;
    acc *= alpha;
  }
  return acc < bound;
}

}  // namespace

std::optional<std::size_t> checked_power(std::size_t nu, int c, std::size_t cap) {
  std::size_t acc = 1;
  for (int i = 0; i < c; ++i) {
    if (nu != 0 && acc > cap / nu) return std::nullopt;
    acc *= nu;
  }
  if (acc > cap) return std::nullopt;
  return acc;
}

// ---------------------------------------------------------------------------
// 3SAT

SymbolTable::SymbolTable(const CnfFormula& phi) : var_count_(phi.var_count) {
  const std::size_t m = phi.clauses.size();
  clause_symbols_.assign(m, {0, 0, 0});
  Label next = 1;
  for (int var = 1; var <= phi.var_count; ++var) {
    for (bool neg : {false, true}) {
      int occ = 0;
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t p = 0; p < 3; ++p) {
          const Literal& lit = phi.clauses[j][p];
          if (lit.var != var || lit.neg != neg) continue;
          symbols_.push_back({next, var, neg, ++occ});
          clause_symbols_[j][p] = next++;
        }
      }
    }
  }
}

SatReduction sat_to_2lfs(const CnfFormula& phi) {
  if (phi.clauses.empty()) throw Error(Errc::MalformedClause, "formula has no clauses");
  if (phi.var_count < 1) throw Error(Errc::MalformedClause, "formula has no variables");
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    for (const Literal& lit : phi.clauses[j]) {
      if (lit.var < 1 || lit.var > phi.var_count) {
        throw Error(Errc::MalformedClause, "clause " + std::to_string(j + 1) + ": variable " +
                                               std::to_string(lit.var) + " outside [1," +
                                               std::to_string(phi.var_count) + "]");
      }
    }
  }
  SymbolTable table(phi);

  // Dimension 1: A_1 B_1 ... A_n B_n against B_1 A_1 ... B_n A_n.
  std::vector<Label> s1;
  std::vector<Label> t1;
  for (int var = 1; var <= phi.var_count; ++var) {
    std::vector<Label> pos;
    std::vector<Label> neg;
    for (const Symbol& sym : table.symbols()) {
      if (sym.var != var) continue;
      (sym.neg ? neg : pos).push_back(sym.id);
    }
    s1.insert(s1.end(), pos.begin(), pos.end());
    s1.insert(s1.end(), neg.begin(), neg.end());
    t1.insert(t1.end(), neg.begin(), neg.end());
    t1.insert(t1.end(), pos.begin(), pos.end());
  }

  // Dimension 2: clause blocks E_1 ... E_m against E_1^R ... E_m^R.
  std::vector<Label> s2;
  std::vector<Label> t2;
  for (std::size_t j = 0; j < table.clause_count(); ++j) {
    const auto& e = table.clause_symbols(j);
    s2.insert(s2.end(), e.begin(), e.end());
    t2.insert(t2.end(), e.rbegin(), e.rend());
  }

  Instance inst(PermutationTuple({Permutation(std::move(s1)), Permutation(std::move(s2))}),
                PermutationTuple({Permutation(std::move(t1)), Permutation(std::move(t2))}));
  return {std::move(inst), std::move(table)};
}

DecodedAssignment decode_assignment(const SymbolTable& table, const FeasibleSet& fixed) {
  DecodedAssignment out;
  out.values.assign(static_cast<std::size_t>(table.var_count()) + 1, std::nullopt);
  for (Label id : fixed) {
    if (id < 1 || static_cast<std::size_t>(id) > table.size()) {
      throw Error(Errc::OutOfRange, "symbol " + std::to_string(id) + " not in the table");
    }
    const Symbol& sym = table.symbol(id);
    auto& slot = out.values[static_cast<std::size_t>(sym.var)];
    const bool value = !sym.neg;
    if (slot && *slot != value) {
      throw Error(Errc::Inconsistent, "variable " + std::to_string(sym.var) + " forced both ways");
    }
    slot = value;
  }
  for (std::size_t j = 0; j < table.clause_count(); ++j) {
    const auto& ids = table.clause_symbols(j);
    const bool sat = std::any_of(ids.begin(), ids.end(), [&](Label id) {
      const Symbol& sym = table.symbol(id);
      const auto& v = out.values[static_cast<std::size_t>(sym.var)];
      return v && *v == !sym.neg;
    });
    out.satisfied += sat;
  }
  return out;
}

std::size_t count_satisfied(const CnfFormula& phi, const std::vector<std::optional<bool>>& values) {
  std::size_t satisfied = 0;
  for (const auto& clause : phi.clauses) {
    const bool sat = std::any_of(clause.begin(), clause.end(), [&](const Literal& lit) {
      const auto idx = static_cast<std::size_t>(lit.var);
      return idx < values.size() && values[idx] && *values[idx] == !lit.neg;
    });
    satisfied += sat;
  }
  return satisfied;
}

// ---------------------------------------------------------------------------
// Graph -> nLFS

Instance graph_to_nlfs(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Permutation> src;
  std::vector<Permutation> tgt;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v = static_cast<Label>(i);
    std::vector<Label> non_nb;
    std::vector<Label> nb;
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      (g.adjacent(v, static_cast<Label>(j)) ? nb : non_nb).push_back(static_cast<Label>(j));
    }
    std::vector<Label> s{v};
    s.insert(s.end(), non_nb.begin(), non_nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    std::vector<Label> t(non_nb);
    t.push_back(v);
    t.insert(t.end(), nb.begin(), nb.end());
    src.emplace_back(std::move(s));
    tgt.emplace_back(std::move(t));
  }
  return Instance(PermutationTuple(std::move(src)), PermutationTuple(std::move(tgt)));
}

// ---------------------------------------------------------------------------
// Power tower

PowerInstance power_construct(const Instance& base, int c, std::size_t cap) {
  check_square(base);
  const std::size_t nu = base.n();
  power_or_throw(nu, c, cap);

  PowerInstance out;
  out.tower_.push_back(base);
  for (int level = 2; level <= c; ++level) {
    const Instance& prev = out.tower_.back();
    const std::size_t width = prev.n();  // nu^{level-1}
    auto lift = [&](const PermutationTuple& outer, const PermutationTuple& inner) {
      std::vector<Permutation> dims;
      for (std::size_t i = 0; i < nu; ++i) {
        std::vector<Label> lambda;
        lambda.reserve(width * nu);
        for (Label k : outer[i]) {
          const auto shift = static_cast<Label>(static_cast<std::size_t>(k - 1) * width);
          for (Label x : inner[i]) lambda.push_back(shift + x);
        }
        dims.emplace_back(std::move(lambda));
      }
      return PermutationTuple(std::move(dims));
    };
    out.tower_.emplace_back(lift(base.source(), prev.source()), lift(base.target(), prev.target()));
  }
  return out;
}

FeasibleSet lift_solution(const FeasibleSet& base_set, const FeasibleSet& prev, int c, std::size_t nu) {
  if (c < 1) throw Error(Errc::OutOfRange, "level c must be >= 1");
  const std::size_t width = ipow(nu, c - 1);
  std::vector<Label> out;
  out.reserve(base_set.size() * prev.size());
  for (Label j : base_set) {
    for (Label k : prev) out.push_back(static_cast<Label>(static_cast<std::size_t>(j - 1) * width) + k);
  }
  return FeasibleSet(std::move(out));
}

BlockPosition block_maps(std::size_t s, int level, std::size_t nu) {
  if (level < 0) throw Error(Errc::OutOfRange, "level must be >= 0");
  const std::size_t width = ipow(nu, level);
  if (s < 1 || s > width * nu) {
    throw Error(Errc::OutOfRange, "s=" + std::to_string(s) + " outside [1," + std::to_string(width * nu) + "]");
  }
  return {(s - 1) / width + 1, (s - 1) % width + 1};
}

PartitionStats partition_stats(const FeasibleSet& J, int level, std::size_t nu) {
  if (level < 1) throw Error(Errc::OutOfRange, "level must be >= 1");
  PartitionStats st;
  std::vector<std::vector<Label>> images(nu);
  for (Label r : J) {
    const auto [block, inblock] = block_maps(static_cast<std::size_t>(r), level - 1, nu);
    images[block - 1].push_back(static_cast<Label>(inblock));
  }
  st.per_block.reserve(nu);
  for (std::size_t l = 1; l <= nu; ++l) {
    FeasibleSet h(std::move(images[l - 1]));
    if (!h.empty()) st.hit_blocks.push_back(l);
    if (h.size() >= st.alpha) {
      st.alpha = h.size();
      st.beta = l;
    }
    st.per_block.push_back(std::move(h));
  }
  return st;
}

FeasibleSet extract_lfs(const PowerInstance& pinst, int c, const FeasibleSet& J) {
  if (c < 1 || c > pinst.level()) {
    throw Error(Errc::OutOfRange, "level " + std::to_string(c) + " outside the tower [1," +
                                      std::to_string(pinst.level()) + "]");
  }
  if (!is_feasible(pinst.at(c), J)) throw Error(Errc::NotFeasible, "J is not feasible for T^" + std::to_string(c));
  if (c == 1) return J;

  const std::size_t nu = pinst.nu();
  FeasibleSet current = J;
  for (int level = c;; --level) {
    PartitionStats st = partition_stats(current, level, nu);
    // alpha < |J|^{1/level}  <=>  alpha^level < |J|
    if (power_below(st.alpha, level, current.size())) {
      std::vector<Label> blocks(st.hit_blocks.begin(), st.hit_blocks.end());
      return FeasibleSet(std::move(blocks));
    }
    FeasibleSet heaviest = std::move(st.per_block[st.beta - 1]);
    if (level == 2) return heaviest;
    current = std::move(heaviest);
  }
}

// ---------------------------------------------------------------------------
// kU power construction

Instance u_power_construct(const Instance& base, int c, std::size_t cap) {
  check_square(base);
  const std::size_t nu = base.n();
  const std::size_t n = power_or_throw(nu, c, cap);
  const std::size_t copies = n / nu;
  auto lift = [&](const PermutationTuple& tuple) {
    std::vector<Permutation> dims;
    for (const Permutation& sigma : tuple) {
      std::vector<Label> lambda;
      lambda.reserve(n);
      for (std::size_t k = 1; k <= copies; ++k) {
        const auto shift = static_cast<Label>((k - 1) * nu);
        for (Label p : sigma) lambda.push_back(shift + p);
      }
      dims.emplace_back(std::move(lambda));
    }
    return PermutationTuple(std::move(dims));
  };
  return Instance(lift(base.source()), lift(base.target()));
}

FeasibleSet u_extract(const Instance& lifted, const FeasibleSet& J, std::size_t nu, int c) {
  const auto n = checked_power(nu, c, lifted.n());
  if (c < 1 || !n || *n != lifted.n()) {
    throw Error(Errc::ShapeMismatch, "lifted instance has n=" + std::to_string(lifted.n()) + ", expected " +
                                         std::to_string(nu) + "^" + std::to_string(c));
  }
  if (!is_feasible(lifted, complement(*n, J))) {
    throw Error(Errc::NotFeasible, "J is not kU-feasible for the lifted instance");
  }
  // Width-nu blocks: copy k holds labels (k-1) nu + 1 .. k nu.
  const std::size_t blocks = *n / nu;
  std::vector<std::vector<Label>> images(blocks);
  for (Label r : J) {
    const auto offset = static_cast<std::size_t>(r - 1);
    images[offset / nu].push_back(static_cast<Label>(offset % nu + 1));
  }
  std::size_t pick = 0;
  for (std::size_t l = 1; l < blocks; ++l) {
    if (images[l].size() < images[pick].size()) pick = l;
  }
  return FeasibleSet(std::move(images[pick]));
}

Instance pad_dimensions(const Instance& inst, std::size_t k_new) {
  if (k_new < inst.k()) {
    throw Error(Errc::ShrinkNotAllowed, "cannot shrink from k=" + std::to_string(inst.k()) + " to k=" +
                                            std::to_string(k_new));
  }
  auto pad = [k_new](const PermutationTuple& tuple) {
    std::vector<Permutation> dims(tuple.begin(), tuple.end());
    while (dims.size() < k_new) dims.push_back(tuple[tuple.k() - 1]);
    return PermutationTuple(std::move(dims));
  };
  return Instance(pad(inst.source()), pad(inst.target()));
}

}  // namespace ulamk
