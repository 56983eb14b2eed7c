#include "ulamk/random.hpp"

#include <limits>
#include <utility>

namespace ulamk {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

long long Rng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

Permutation Rng::permutation(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(below(i));
    std::swap(labels[i - 1], labels[j]);
  }
  return Permutation(std::move(labels));
}

Instance gen_random(std::size_t n, std::size_t k, Rng& rng) {
  if (n < 1 || k < 1) throw Error(Errc::OutOfRange, "gen needs n >= 1 and k >= 1");
  std::vector<Permutation> s;
  std::vector<Permutation> t;
  for (std::size_t r = 0; r < k; ++r) s.push_back(rng.permutation(n));
  for (std::size_t r = 0; r < k; ++r) t.push_back(rng.permutation(n));
  return Instance(PermutationTuple(std::move(s)), PermutationTuple(std::move(t)));
}

Instance gen_random(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return gen_random(n, k, rng);
}

CnfFormula random_cnf(int vars, std::size_t clauses, Rng& rng) {
  CnfFormula phi;
  phi.var_count = vars;
  for (std::size_t j = 0; j < clauses; ++j) {
    std::array<Literal, 3> clause;
    for (auto& lit : clause) {
      lit.var = static_cast<int>(rng.between(1, vars));
      lit.neg = rng.chance(0.5);
    }
    phi.clauses.push_back(clause);
  }
  return phi;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (rng.chance(p)) g.add_edge(static_cast<Label>(u), static_cast<Label>(v));
    }
  }
  return g;
}

}  // namespace ulamk
