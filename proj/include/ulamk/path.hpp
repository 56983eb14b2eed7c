#pragma once

// Insert moves on permutation tuples and shortest move paths.
//
// An insert move takes one element out of every dimension and puts it back
// at a per-dimension position. Putting it back where it was is allowed, so a
// tuple is its own neighbour.

#include <cstddef>
#include <string_view>
#include <vector>

#include "ulamk/core.hpp"

namespace ulamk {

struct InsertMove {
  Label element = 0;
  /// 1-based final position of `element` in each dimension (equivalently, its
  /// insertion index in the permutation with the element removed).
  std::vector<std::size_t> targets;

  friend bool operator==(const InsertMove&, const InsertMove&) = default;
};

struct MovePath {
  PermutationTuple start;
  std::vector<InsertMove> moves;
  PermutationTuple end;

  std::size_t length() const noexcept { return moves.size(); }
};

/// Throws BadPosition for an element outside [n], a wrong number of targets,
/// or a target outside [1, n].
PermutationTuple apply_insert_move(const PermutationTuple& gamma, const InsertMove& mv);

/// True iff deleting some single element from every dimension of both tuples
/// leaves them equal. Throws ShapeMismatch when n or k differ.
bool is_neighbor(const PermutationTuple& a, const PermutationTuple& b);

/// Moves every element outside `fixed` into place, in ascending order of its
/// position in the first target dimension. Each element goes to the smallest
/// position that puts it in target order relative to the already settled
/// elements. Throws NotFeasible when `fixed` is not feasible.
MovePath reconstruct_path(const Instance& inst, const FeasibleSet& fixed);

enum class PathStatus {
  Ok,
  ShapeMismatch,
  StartMismatch,
  BadMove,
  EndMismatch,
  TargetMismatch,
};

std::string_view path_status_name(PathStatus status) noexcept;

struct PathCheck {
  PathStatus status = PathStatus::Ok;
  /// 0-based index of the offending move for BadMove.
  std::size_t step = 0;

  explicit operator bool() const noexcept { return status == PathStatus::Ok; }
};

/// Replays the moves from the start tuple. Fails if the start is not the
/// instance source, a move is malformed, replay does not reach the recorded
/// end, or the end is not the instance target.
PathCheck verify_path(const Instance& inst, const MovePath& path);

/// Tuples along the path, start first; path.length() + 1 entries.
std::vector<PermutationTuple> path_frames(const MovePath& path);

}  // namespace ulamk
