#pragma once

// Sequence-pair decoding for k = 2 tuples.
//
// For blocks a, b and a pair (first, second):
//   a left of b  iff a precedes b in both permutations;
//   a below b    iff a follows b in first and precedes b in second.
// x is the longest width-weighted path over "left of", y the longest
// height-weighted path over "below".

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ulamk/core.hpp"
#include "ulamk/path.hpp"

namespace ulamk {

struct RectSpec {
  std::vector<long long> w;
  std::vector<long long> h;

  static RectSpec unit(std::size_t n) { return {std::vector<long long>(n, 1), std::vector<long long>(n, 1)}; }
  std::size_t size() const noexcept { return w.size(); }
};

/// Throws ShapeMismatch unless w and h have n positive entries.
void validate_rects(const RectSpec& rects, std::size_t n);

struct Placement {
  /// Indexed by label - 1.
  std::vector<long long> x;
  std::vector<long long> y;
  long long width = 0;
  long long height = 0;
};

enum class Relation { LeftOf, RightOf, Below, Above };

/// How block a sits relative to block b (a != b).
Relation relation(const Permutation& first, const Permutation& second, Label a, Label b);

/// O(n^2) longest-path decoding. Throws ShapeMismatch when the permutations
/// and rects disagree on n.
Placement sp_place(const Permutation& first, const Permutation& second, const RectSpec& rects);

/// True iff no two rectangles share interior area and all lie inside the
/// bounding box.
bool placement_is_valid(const Placement& p, const RectSpec& rects);

/// Drawing constants; all SVG geometry derives from these.
struct SvgStyle {
  static constexpr long long kScale = 24;
  static constexpr long long kMargin = 4;
  static constexpr int kStroke = 1;
  static constexpr int kHighlightStroke = 4;
};

/// One frame as SVG text. `highlight` = 0 draws no highlight.
std::string render_svg(const Placement& p, const RectSpec& rects, Label highlight);

/// Writes frame_000.svg .. frame_NNN.svg into out_dir, one per tuple on the
/// path; frame i > 0 highlights the element moved by step i. Returns the file
/// names. Throws ShapeMismatch (k != 2), InvalidPath, IoError.
std::vector<std::string> render_frames(const Instance& inst, const MovePath& path, const RectSpec& rects,
                                       const std::filesystem::path& out_dir);

}  // namespace ulamk
