#pragma once

// Seeded generators. Bounded draws use rejection sampling on mt19937_64 so
// that output is identical across standard libraries (std::shuffle and
// std::uniform_int_distribution are implementation-defined).

#include <cstdint>
#include <random>

#include "ulamk/core.hpp"
#include "ulamk/reductions.hpp"

namespace ulamk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);
  /// True with probability p (53-bit resolution).
  bool chance(double p);

  Permutation permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// 2k independent uniform permutations of [n], source dimensions first.
Instance gen_random(std::size_t n, std::size_t k, std::uint64_t seed);
Instance gen_random(std::size_t n, std::size_t k, Rng& rng);

/// Uniform 3CNF: each literal picks a variable in [vars] and a sign.
CnfFormula random_cnf(int vars, std::size_t clauses, Rng& rng);

/// G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

}  // namespace ulamk
