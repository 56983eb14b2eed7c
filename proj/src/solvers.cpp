#include "ulamk/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace ulamk {

namespace {

// ---------------------------------------------------------------------------
// Exhaustive oracle. Sets are grown in ascending label order; adding v to a
// feasible B keeps it feasible iff, in every dimension, v has the same number
// of B-members before it in source and target.

class SubsetSearch {
 public:
  explicit SubsetSearch(const Instance& inst) : inst_(inst), n_(inst.n()) {}

  bool can_add(Label v) const {
    for (std::size_t r = 0; r < inst_.k(); ++r) {
      const auto& s = inst_.source()[r];
      const auto& t = inst_.target()[r];
      const std::size_t ps = s.position(v);
      const std::size_t pt = t.position(v);
      std::size_t before_s = 0;
      std::size_t before_t = 0;
      for (Label b : chosen_) {
        before_s += s.position(b) < ps;
        before_t += t.position(b) < pt;
      }
      if (before_s != before_t) return false;
    }
    return true;
  }

  // Include-first recursion visits equal-size sets in lexicographic order, so
  // accepting only strictly larger sets keeps the lexicographically smallest.
  void dfs(std::size_t next) {
    ++nodes_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (next > n_) return;
    if (chosen_.size() + (n_ - next + 1) <= best_.size()) return;
    const auto v = static_cast<Label>(next);
    if (can_add(v)) {
      chosen_.push_back(v);
      dfs(next + 1);
      chosen_.pop_back();
    }
    dfs(next + 1);
  }

  // Applies an include/exclude pattern for labels 1..depth. Returns false if
  // the pattern is infeasible.
  bool seed_prefix(std::uint64_t pattern, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      if (!((pattern >> i) & 1U)) continue;
      const auto v = static_cast<Label>(i + 1);
      if (!can_add(v)) return false;
      chosen_.push_back(v);
    }
    return true;
  }

  const std::vector<Label>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  const Instance& inst_;
  std::size_t n_;
  std::vector<Label> chosen_;
  std::vector<Label> best_;
  std::uint64_t nodes_ = 0;
};

void check_brute_force_guard(const Instance& inst) {
  if (inst.n() > kBruteForceLimit) {
    throw Error(Errc::TooLarge, "brute force limited to n <= " + std::to_string(kBruteForceLimit) + ", got n=" +
                                    std::to_string(inst.n()));
  }
}

// Orders the patterns of one prefix so that the include-first order is kept:
// pattern bits are read from label 1 (most significant) downwards.
std::uint64_t pattern_for_rank(std::uint64_t rank, std::size_t depth) {
  std::uint64_t pattern = 0;
  for (std::size_t i = 0; i < depth; ++i) {
    const bool include = !((rank >> (depth - 1 - i)) & 1U);
    if (include) pattern |= std::uint64_t{1} << i;
  }
  return pattern;
}

// ---------------------------------------------------------------------------
// Max clique over bitsets.

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64), adj_(n_ * words_, 0) {
    std::vector<std::size_t> degree(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (Label w : g.neighbors(static_cast<Label>(v + 1))) {
        const auto u = static_cast<std::size_t>(w - 1);
        adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
      }
      degree[v] = g.degree(static_cast<Label>(v + 1));
    }
    color_order_.resize(n_);
    std::iota(color_order_.begin(), color_order_.end(), std::size_t{0});
    std::stable_sort(color_order_.begin(), color_order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  }

  void run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    expand(all);
  }

  FeasibleSet best() const {
    std::vector<Label> labels;
    for (std::size_t v : best_) labels.push_back(static_cast<Label>(v + 1));
    return FeasibleSet(std::move(labels));
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static std::size_t count(const std::vector<std::uint64_t>& set) {
    std::size_t c = 0;
    for (auto w : set) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  static bool test(const std::vector<std::uint64_t>& set, std::size_t v) { return (set[v / 64] >> (v % 64)) & 1U; }

  const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

  // Number of color classes in a greedy coloring of `cand`; an upper bound on
  // its clique number.
  std::size_t color_bound(const std::vector<std::uint64_t>& cand) {
    classes_.clear();
    for (std::size_t v : color_order_) {
      if (!test(cand, v)) continue;
      const std::uint64_t* nb = row(v);
      bool placed = false;
      for (auto& cls : classes_) {
        bool clash = false;
        for (std::size_t w = 0; w < words_ && !clash; ++w) clash = (cls[w] & nb[w]) != 0;
        if (!clash) {
          cls[v / 64] |= std::uint64_t{1} << (v % 64);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes_.emplace_back(words_, 0);
        classes_.back()[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
    return classes_.size();
  }

  void expand(std::vector<std::uint64_t> cand) {
    ++nodes_;
    std::size_t remaining = count(cand);
    if (remaining == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + remaining <= best_.size()) return;
    if (current_.size() + color_bound(cand) <= best_.size()) return;

    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w]) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
        std::vector<std::uint64_t> next(words_);
        const std::uint64_t* nb = row(v);
        for (std::size_t x = 0; x < words_; ++x) next[x] = cand[x] & nb[x];
        current_.push_back(v);
        expand(std::move(next));
        current_.pop_back();
        cand[w] &= cand[w] - 1;
        --remaining;
        if (current_.size() + remaining <= best_.size()) return;
      }
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> color_order_;
  std::vector<std::vector<std::uint64_t>> classes_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Bounded search tree for kUD.

class CoverSearch {
 public:
  CoverSearch(std::size_t n, std::vector<std::pair<Label, Label>> conflicts)
      : removed_(n + 1, 0), conflicts_(std::move(conflicts)) {}

  bool search(long long budget) {
    ++nodes_;
    const auto open = std::find_if(conflicts_.begin(), conflicts_.end(), [&](const auto& e) {
      return !removed_[static_cast<std::size_t>(e.first)] && !removed_[static_cast<std::size_t>(e.second)];
    });
    if (open == conflicts_.end()) return true;
    if (budget == 0) return false;
    for (Label v : {open->first, open->second}) {
      removed_[static_cast<std::size_t>(v)] = 1;
      if (search(budget - 1)) return true;
      removed_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  FeasibleSet removed() const {
    std::vector<Label> out;
    for (std::size_t v = 1; v < removed_.size(); ++v) {
      if (removed_[v]) out.push_back(static_cast<Label>(v));
    }
    return FeasibleSet(std::move(out));
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::vector<char> removed_;
  std::vector<std::pair<Label, Label>> conflicts_;
  std::uint64_t nodes_ = 0;
};

SolveResult make_result(FeasibleSet witness, bool optimal, std::uint64_t nodes) {
  SolveResult r;
  r.size = witness.size();
  r.witness = std::move(witness);
  r.optimal = optimal;
  r.node_count = nodes;
  return r;
}

}  // namespace

SolveResult brute_force_opt(const Instance& inst) {
  check_brute_force_guard(inst);
  SubsetSearch search(inst);
  search.dfs(1);
  return make_result(FeasibleSet(search.best()), true, search.nodes());
}

SolveResult brute_force_opt_parallel(const Instance& inst) {
  check_brute_force_guard(inst);
  const std::size_t depth = std::min<std::size_t>(inst.n(), 8);
  const auto tasks = static_cast<std::ptrdiff_t>(std::uint64_t{1} << depth);
  std::vector<std::vector<Label>> best(static_cast<std::size_t>(tasks));
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(tasks), 0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t rank = 0; rank < tasks; ++rank) {
    SubsetSearch search(inst);
    if (search.seed_prefix(pattern_for_rank(static_cast<std::uint64_t>(rank), depth), depth)) {
      search.dfs(depth + 1);
      best[static_cast<std::size_t>(rank)] = search.best();
      nodes[static_cast<std::size_t>(rank)] = search.nodes();
    }
  }

  // Ranks follow include-first order, so the first maximum is lexicographically smallest.
  std::size_t pick = 0;
  for (std::size_t i = 1; i < best.size(); ++i) {
    if (best[i].size() > best[pick].size()) pick = i;
  }
  return make_result(FeasibleSet(best[pick]), true, std::accumulate(nodes.begin(), nodes.end(), std::uint64_t{0}));
}

CliqueResult max_clique(const Graph& g) {
  CliqueSearch search(g);
  search.run();
  return {search.best(), search.nodes()};
}

SolveResult solve_lfs_exact(const Instance& inst) {
  auto [clique, nodes] = max_clique(agreement_graph(inst));
  return make_result(std::move(clique), true, nodes);
}

SolveResult solve_lfs_k1(const Instance& inst) {
  if (inst.k() != 1) {
    throw Error(Errc::WrongDimension, "k1 solver needs k=1, got k=" + std::to_string(inst.k()));
  }
  const auto& s = inst.source()[0];
  const auto& t = inst.target()[0];
  const std::size_t n = inst.n();
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = t.position(s[i]);

  // tails[l] = index into seq of the smallest tail of an increasing run of length l+1.
  std::vector<std::size_t> tails;
  std::vector<std::ptrdiff_t> prev(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), seq[i],
                               [&](std::size_t idx, std::size_t value) { return seq[idx] < value; });
    if (it != tails.begin()) prev[i] = static_cast<std::ptrdiff_t>(*std::prev(it));
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<Label> witness;
  for (auto i = tails.empty() ? -1 : static_cast<std::ptrdiff_t>(tails.back()); i >= 0;
       i = prev[static_cast<std::size_t>(i)]) {
    witness.push_back(s[static_cast<std::size_t>(i)]);
  }
  return make_result(FeasibleSet(std::move(witness)), true, 0);
}

SolveResult approx_u(const Instance& inst) {
  std::vector<char> matched(inst.n() + 1, 0);
  std::vector<Label> cover;
  for (auto [a, b] : conflict_edges(inst)) {
    if (matched[static_cast<std::size_t>(a)] || matched[static_cast<std::size_t>(b)]) continue;
    matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
    cover.push_back(a);
    cover.push_back(b);
  }
  return make_result(FeasibleSet(std::move(cover)), false, 0);
}

DecideResult decide_ud_fpt(const Instance& inst, long long l) {
  if (l < 0 || l > static_cast<long long>(inst.n())) {
    throw Error(Errc::OutOfRange, "l=" + std::to_string(l) + " outside [0," + std::to_string(inst.n()) + "]");
  }
  CoverSearch search(inst.n(), conflict_edges(inst));
  DecideResult r;
  r.answer = search.search(l);
  r.node_count = search.nodes();
  if (r.answer) r.removed = search.removed();
  return r;
}

UlamResult ulam_distance(const Instance& inst) {
  auto exact = solve_lfs_exact(inst);
  UlamResult r;
  r.distance = inst.n() - exact.size;
  r.removed = dual_complement(inst, exact.witness);
  r.fixed = std::move(exact.witness);
  return r;
}

}  // namespace ulamk
