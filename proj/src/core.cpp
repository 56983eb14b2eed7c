#include "ulamk/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ulamk {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateValue: return "DuplicateValue";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::MalformedClause: return "MalformedClause";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NotSquare: return "NotSquare";
    case Errc::LevelTooLarge: return "LevelTooLarge";
    case Errc::NotFeasible: return "NotFeasible";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case Errc::BadPosition: return "BadPosition";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::IoError: return "IoError";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

namespace {

// Shared by the Permutation constructor and validate_instance(); `where`
// prefixes the message with side/dimension context.
std::vector<std::size_t> check_permutation(const std::vector<long long>& values, const std::string& where) {
  const std::size_t n = values.size();
  if (n == 0) {
    throw Error(Errc::LengthMismatch, where + ": empty permutation");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long v = values[i];
    if (v < 1 || v > static_cast<long long>(n)) {
      throw Error(Errc::OutOfRange, where + ", index " + std::to_string(i + 1) + ": value " +
                                        std::to_string(v) + " not in [1," + std::to_string(n) + "]");
    }
    auto& slot = pos[static_cast<std::size_t>(v - 1)];
    if (slot != n) {
      throw Error(Errc::DuplicateValue, where + ", index " + std::to_string(i + 1) + ": value " +
                                            std::to_string(v) + " repeated");
    }
    slot = i;
  }
  return pos;
}

}  // namespace

Permutation::Permutation(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::vector<long long> wide(labels_.begin(), labels_.end());
  pos_ = check_permutation(wide, "permutation");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  return Permutation(std::move(labels));
}

PermutationTuple::PermutationTuple(std::vector<Permutation> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(Errc::DimensionMismatch, "tuple needs at least one dimension");
  }
  for (std::size_t r = 1; r < dims_.size(); ++r) {
    if (dims_[r].size() != dims_[0].size()) {
      throw Error(Errc::LengthMismatch, "dimension " + std::to_string(r + 1) + " has length " +
                                            std::to_string(dims_[r].size()) + ", expected " +
                                            std::to_string(dims_[0].size()));
    }
  }
}

Instance::Instance(PermutationTuple source, PermutationTuple target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.k() != target_.k()) {
    throw Error(Errc::DimensionMismatch, "source has " + std::to_string(source_.k()) +
                                             " dimensions, target has " + std::to_string(target_.k()));
  }
  if (source_.n() != target_.n()) {
    throw Error(Errc::LengthMismatch, "source has n=" + std::to_string(source_.n()) +
                                          ", target has n=" + std::to_string(target_.n()));
  }
}

Instance validate_instance(const RawTuple& source, const RawTuple& target) {
  if (source.empty() || target.empty()) {
    throw Error(Errc::DimensionMismatch, "both sides need at least one dimension");
  }
  if (source.size() != target.size()) {
    throw Error(Errc::DimensionMismatch, "source has " + std::to_string(source.size()) +
                                             " dimensions, target has " + std::to_string(target.size()));
  }
  const std::size_t n = source.front().size();
  auto build = [n](const RawTuple& raw, const char* side) {
    std::vector<Permutation> dims;
    dims.reserve(raw.size());
    for (std::size_t r = 0; r < raw.size(); ++r) {
      const std::string where = std::string(side) + " dim " + std::to_string(r + 1);
      if (raw[r].size() != n) {
        throw Error(Errc::LengthMismatch, where + ": length " + std::to_string(raw[r].size()) +
                                              ", expected " + std::to_string(n));
      }
      check_permutation(raw[r], where);
      dims.emplace_back(std::vector<Label>(raw[r].begin(), raw[r].end()));
    }
    return PermutationTuple(std::move(dims));
  };
  return Instance(build(source, "s"), build(target, "t"));
}

FeasibleSet::FeasibleSet(std::vector<Label> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 1) {
    throw Error(Errc::OutOfRange, "set member " + std::to_string(members_.front()) + " below 1");
  }
}

FeasibleSet FeasibleSet::all(std::size_t n) {
  std::vector<Label> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Label>(i + 1);
  return FeasibleSet(std::move(m));
}

bool FeasibleSet::contains(Label v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> FeasibleSet::bitmap(std::size_t n) const {
  if (max_label() > static_cast<Label>(n)) {
    throw Error(Errc::OutOfRange, "set member " + std::to_string(max_label()) + " exceeds n=" + std::to_string(n));
  }
  std::vector<char> in(n + 1, 0);
  for (Label v : members_) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

std::vector<Label> restrict(const Permutation& perm, const FeasibleSet& set) {
  const auto in = set.bitmap(perm.size());
  std::vector<Label> out;
  out.reserve(set.size());
  for (Label v : perm) {
    if (in[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool is_feasible(const Instance& inst, const FeasibleSet& set) {
  const auto in = set.bitmap(inst.n());
  for (std::size_t r = 0; r < inst.k(); ++r) {
    const auto s = inst.source()[r].labels();
    const auto t = inst.target()[r].labels();
    // Two cursors walk the restricted subsequences in lockstep.
    std::size_t j = 0;
    for (Label v : s) {
      if (!in[static_cast<std::size_t>(v)]) continue;
      while (!in[static_cast<std::size_t>(t[j])]) ++j;
      if (t[j] != v) return false;
      ++j;
    }
  }
  return true;
}

FeasibleSet complement(std::size_t n, const FeasibleSet& set) {
  const auto in = set.bitmap(n);
  std::vector<Label> out;
  out.reserve(n - set.size());
  for (std::size_t v = 1; v <= n; ++v) {
    if (!in[v]) out.push_back(static_cast<Label>(v));
  }
  return FeasibleSet(std::move(out));
}

FeasibleSet dual_complement(const Instance& inst, const FeasibleSet& set) { return complement(inst.n(), set); }

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n) : n_(n), dense_(n <= kDenseLimit) {
  if (dense_) {
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
  } else {
    adj_.resize(n);
  }
}

void Graph::add_edge(Label u, Label v) {
  if (u < 1 || v < 1 || u > static_cast<Label>(n_) || v > static_cast<Label>(n_)) {
    throw Error(Errc::OutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside [1," +
                                      std::to_string(n_) + "]");
  }
  if (u == v) {
    throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(u));
  }
  const auto a = static_cast<std::size_t>(u - 1);
  const auto b = static_cast<std::size_t>(v - 1);
  if (dense_) {
    bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  } else {
    for (auto [x, y] : {std::pair{a, v}, std::pair{b, u}}) {
      auto& row = adj_[x];
      auto it = std::lower_bound(row.begin(), row.end(), y);
      if (it == row.end() || *it != y) row.insert(it, y);
    }
  }
}

bool Graph::adjacent(Label u, Label v) const noexcept {
  if (u < 1 || v < 1 || u > static_cast<Label>(n_) || v > static_cast<Label>(n_)) return false;
  const auto a = static_cast<std::size_t>(u - 1);
  const auto b = static_cast<std::size_t>(v - 1);
  if (dense_) return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), v);
}

std::vector<Label> Graph::neighbors(Label v) const {
  const auto a = static_cast<std::size_t>(v - 1);
  if (!dense_) return adj_[a];
  std::vector<Label> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[a * words_ + w];
    while (word) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<Label>(w * 64 + static_cast<std::size_t>(bit) + 1));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t Graph::degree(Label v) const {
  const auto a = static_cast<std::size_t>(v - 1);
  if (!dense_) return adj_[a].size();
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[a * words_ + w]));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 1; v <= n_; ++v) total += degree(static_cast<Label>(v));
  return total / 2;
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t u = 1; u <= n_; ++u) {
    for (Label v : neighbors(static_cast<Label>(u))) {
      if (v > static_cast<Label>(u)) out.emplace_back(static_cast<Label>(u), v);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t v = 1; v <= a.n_; ++v) {
    if (a.neighbors(static_cast<Label>(v)) != b.neighbors(static_cast<Label>(v))) return false;
  }
  return true;
}

struct GraphBuilder {
  // Fills the row of vertex `u` (both storage modes). Rows are independent,
  // so different threads may fill different rows concurrently.
  static void fill_row(Graph& g, const Instance& inst, std::size_t u) {
    const std::size_t n = inst.n();
    const auto label_u = static_cast<Label>(u + 1);
    std::vector<Label> row;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      const auto label_v = static_cast<Label>(v + 1);
      bool agree = true;
      for (std::size_t r = 0; r < inst.k() && agree; ++r) {
        const bool before_s = inst.source()[r].position(label_u) < inst.source()[r].position(label_v);
        const bool before_t = inst.target()[r].position(label_u) < inst.target()[r].position(label_v);
        agree = before_s == before_t;
      }
      if (!agree) continue;
      if (g.dense_) {
        g.bits_[u * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      } else {
        row.push_back(label_v);
      }
    }
    if (!g.dense_) g.adj_[u] = std::move(row);
  }
};

AgreementGraph agreement_graph_serial(const Instance& inst) {
  Graph g(inst.n());
  for (std::size_t u = 0; u < inst.n(); ++u) GraphBuilder::fill_row(g, inst, u);
  return g;
}

AgreementGraph agreement_graph(const Instance& inst) {
  Graph g(inst.n());
  const auto n = static_cast<std::ptrdiff_t>(inst.n());
#pragma omp parallel for schedule(dynamic, 16) if (n > 256)
  for (std::ptrdiff_t u = 0; u < n; ++u) GraphBuilder::fill_row(g, inst, static_cast<std::size_t>(u));
  return g;
}

std::vector<std::pair<Label, Label>> conflict_edges(const Instance& inst) {
  const std::size_t n = inst.n();
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto a = static_cast<Label>(i);
      const auto b = static_cast<Label>(j);
      for (std::size_t r = 0; r < inst.k(); ++r) {
        const bool before_s = inst.source()[r].position(a) < inst.source()[r].position(b);
        const bool before_t = inst.target()[r].position(a) < inst.target()[r].position(b);
        if (before_s != before_t) {
          out.emplace_back(a, b);
          break;
        }
      }
    }
  }
  return out;
}

bool is_clique(const Graph& g, const FeasibleSet& set) {
  const auto m = set.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

}  // namespace ulamk
