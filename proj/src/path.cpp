#include "ulamk/path.hpp"

#include <algorithm>
#include <string>

namespace ulamk {

namespace {

std::vector<Label> without(std::span<const Label> perm, Label v) {
  std::vector<Label> out;
  out.reserve(perm.size());
  for (Label x : perm) {
    if (x != v) out.push_back(x);
  }
  return out;
}

bool same_after_deleting(const PermutationTuple& a, const PermutationTuple& b, Label v) {
  for (std::size_t r = 0; r < a.k(); ++r) {
    if (without(a[r].labels(), v) != without(b[r].labels(), v)) return false;
  }
  return true;
}

}  // namespace

PermutationTuple apply_insert_move(const PermutationTuple& gamma, const InsertMove& mv) {
  const std::size_t n = gamma.n();
  if (mv.element < 1 || mv.element > static_cast<Label>(n)) {
    throw Error(Errc::BadPosition, "element " + std::to_string(mv.element) + " outside [1," + std::to_string(n) + "]");
  }
  if (mv.targets.size() != gamma.k()) {
    throw Error(Errc::BadPosition, "move has " + std::to_string(mv.targets.size()) + " targets for k=" +
                                       std::to_string(gamma.k()));
  }
  std::vector<Permutation> dims;
  dims.reserve(gamma.k());
  for (std::size_t r = 0; r < gamma.k(); ++r) {
    const std::size_t pos = mv.targets[r];
    if (pos < 1 || pos > n) {
      throw Error(Errc::BadPosition, "dimension " + std::to_string(r + 1) + ": target " + std::to_string(pos) +
                                         " outside [1," + std::to_string(n) + "]");
    }
    auto seq = without(gamma[r].labels(), mv.element);
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos - 1), mv.element);
    dims.emplace_back(std::move(seq));
  }
  return PermutationTuple(std::move(dims));
}

bool is_neighbor(const PermutationTuple& a, const PermutationTuple& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw Error(Errc::ShapeMismatch, "tuples differ in n or k");
  }
  if (a == b) return true;
  for (std::size_t v = 1; v <= a.n(); ++v) {
    if (same_after_deleting(a, b, static_cast<Label>(v))) return true;
  }
  return false;
}

MovePath reconstruct_path(const Instance& inst, const FeasibleSet& fixed) {
  if (!is_feasible(inst, fixed)) throw Error(Errc::NotFeasible, "fixed set is not feasible");
  const std::size_t n = inst.n();
  const std::size_t k = inst.k();

  std::vector<char> settled = fixed.bitmap(n);
  std::vector<Label> pending;
  for (Label v : inst.target()[0]) {
    if (!settled[static_cast<std::size_t>(v)]) pending.push_back(v);
  }

  MovePath path;
  path.start = inst.source();
  std::vector<std::vector<Label>> current;
  for (const auto& perm : inst.source()) current.emplace_back(perm.begin(), perm.end());

  for (Label v : pending) {
    InsertMove mv{v, std::vector<std::size_t>(k)};
    for (std::size_t r = 0; r < k; ++r) {
      const auto& target = inst.target()[r];
      auto seq = without(current[r], v);
      // Right after the last settled element that precedes v in the target.
      std::size_t insert_at = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const Label x = seq[i];
        if (settled[static_cast<std::size_t>(x)] && target.position(x) < target.position(v)) insert_at = i + 1;
      }
      seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(insert_at), v);
      mv.targets[r] = insert_at + 1;
      current[r] = std::move(seq);
    }
    settled[static_cast<std::size_t>(v)] = 1;
    path.moves.push_back(std::move(mv));
  }

  std::vector<Permutation> end;
  for (auto& seq : current) end.emplace_back(std::move(seq));
  path.end = PermutationTuple(std::move(end));
  return path;
}

std::string_view path_status_name(PathStatus status) noexcept {
  switch (status) {
    case PathStatus::Ok: return "ok";
    case PathStatus::ShapeMismatch: return "shape_mismatch";
    case PathStatus::StartMismatch: return "start_mismatch";
    case PathStatus::BadMove: return "bad_move";
    case PathStatus::EndMismatch: return "end_mismatch";
    case PathStatus::TargetMismatch: return "target_mismatch";
  }
  return "unknown";
}

PathCheck verify_path(const Instance& inst, const MovePath& path) {
  if (path.start.k() != inst.k() || path.start.n() != inst.n() || path.end.k() != inst.k() ||
      path.end.n() != inst.n()) {
    return {PathStatus::ShapeMismatch, 0};
  }
  if (!(path.start == inst.source())) return {PathStatus::StartMismatch, 0};
  PermutationTuple gamma = path.start;
  for (std::size_t i = 0; i < path.moves.size(); ++i) {
    try {
      gamma = apply_insert_move(gamma, path.moves[i]);
    } catch (const Error&) {
      return {PathStatus::BadMove, i};
    }
  }
  if (!(gamma == path.end)) return {PathStatus::EndMismatch, path.moves.size()};
  if (!(path.end == inst.target())) return {PathStatus::TargetMismatch, path.moves.size()};
  return {};
}

std::vector<PermutationTuple> path_frames(const MovePath& path) {
  std::vector<PermutationTuple> frames{path.start};
  for (const auto& mv : path.moves) frames.push_back(apply_insert_move(frames.back(), mv));
  return frames;
}

}  // namespace ulamk
