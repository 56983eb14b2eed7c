#pragma once

// Domain types for pairs of permutation tuples, feasibility checking and the
// agreement / conflict graph construction.
//
// Labels are 1-based everywhere in the public surface. Positions returned by
// Permutation::position() are 0-based and stay internal.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "ulamk/error.hpp"

namespace ulamk {

using Label = std::int32_t;

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `labels` is a permutation of {1..n}, n >= 1.
  explicit Permutation(std::vector<Label> labels);
  Permutation(std::initializer_list<Label> labels) : Permutation(std::vector<Label>(labels)) {}

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t i) const noexcept { return labels_[i]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  /// 0-based index of `label` in this permutation.
  std::size_t position(Label label) const noexcept { return pos_[static_cast<std::size_t>(label - 1)]; }

  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> pos_;
};

class PermutationTuple {
 public:
  PermutationTuple() = default;
  /// Requires k >= 1 and a common length n.
  explicit PermutationTuple(std::vector<Permutation> dims);

  std::size_t k() const noexcept { return dims_.size(); }
  std::size_t n() const noexcept { return dims_.empty() ? 0 : dims_.front().size(); }
  const Permutation& operator[](std::size_t r) const noexcept { return dims_[r]; }
  std::span<const Permutation> dims() const noexcept { return dims_; }

  auto begin() const noexcept { return dims_.begin(); }
  auto end() const noexcept { return dims_.end(); }

  friend bool operator==(const PermutationTuple&, const PermutationTuple&) = default;

 private:
  std::vector<Permutation> dims_;
};

class Instance {
 public:
  Instance() = default;
  Instance(PermutationTuple source, PermutationTuple target);

  const PermutationTuple& source() const noexcept { return source_; }
  const PermutationTuple& target() const noexcept { return target_; }
  std::size_t n() const noexcept { return source_.n(); }
  std::size_t k() const noexcept { return source_.k(); }

  Instance swapped() const { return Instance(target_, source_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  PermutationTuple source_;
  PermutationTuple target_;
};

using RawTuple = std::vector<std::vector<long long>>;

/// Checks raw integer sequences and builds an Instance. Errors name the
/// offending side, dimension (1-based) and index (1-based).
Instance validate_instance(const RawTuple& source, const RawTuple& target);

/// A subset of [n], kept sorted and duplicate free. Whether it is feasible is a
/// property relative to an Instance, checked by is_feasible().
class FeasibleSet {
 public:
  FeasibleSet() = default;
  explicit FeasibleSet(std::vector<Label> members);
  FeasibleSet(std::initializer_list<Label> members) : FeasibleSet(std::vector<Label>(members)) {}

  static FeasibleSet all(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Label> members() const noexcept { return members_; }
  bool contains(Label v) const noexcept;
  Label max_label() const noexcept { return members_.empty() ? 0 : members_.back(); }
  /// Membership bitmap indexed by label (index 0 unused). Throws OutOfRange
  /// if a member exceeds n.
  std::vector<char> bitmap(std::size_t n) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const FeasibleSet&, const FeasibleSet&) = default;
  friend auto operator<=>(const FeasibleSet& a, const FeasibleSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Label> members_;
};

/// Subsequence of `perm` made of exactly the members of `set`.
std::vector<Label> restrict(const Permutation& perm, const FeasibleSet& set);

/// True iff restricting every source and target dimension to `set` gives
/// identical sequences. O(k n).
bool is_feasible(const Instance& inst, const FeasibleSet& set);

/// [n] \ set.
FeasibleSet dual_complement(const Instance& inst, const FeasibleSet& set);
FeasibleSet complement(std::size_t n, const FeasibleSet& set);

/// Undirected simple graph on vertices [n]. Dense bit-matrix storage up to
/// kDenseLimit vertices, sorted adjacency lists above it.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  bool dense() const noexcept { return dense_; }

  /// Symmetric insert; rejects self-loops with SelfLoop and labels outside [n]
  /// with OutOfRange.
  void add_edge(Label u, Label v);
  bool adjacent(Label u, Label v) const noexcept;
  std::vector<Label> neighbors(Label v) const;
  std::size_t degree(Label v) const;
  std::size_t edge_count() const;
  /// All edges as (min, max) pairs in lexicographic order.
  std::vector<std::pair<Label, Label>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend struct GraphBuilder;

  std::size_t n_ = 0;
  bool dense_ = true;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Label>> adj_;
};

using AgreementGraph = Graph;

/// Edge {i,j} iff i and j keep their relative order between source and target
/// in every dimension. O(k n^2); rows are filled in parallel with OpenMP.
AgreementGraph agreement_graph(const Instance& inst);
/// Single-threaded reference for agreement_graph().
AgreementGraph agreement_graph_serial(const Instance& inst);

/// Pairs reversed in at least one dimension, lexicographic order. These are
/// exactly the non-edges of agreement_graph().
std::vector<std::pair<Label, Label>> conflict_edges(const Instance& inst);

/// True iff `set` is a clique of `g`.
bool is_clique(const Graph& g, const FeasibleSet& set);

}  // namespace ulamk
