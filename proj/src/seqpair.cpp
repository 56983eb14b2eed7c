#include "ulamk/seqpair.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ulamk {

void validate_rects(const RectSpec& rects, std::size_t n) {
  if (rects.w.size() != n || rects.h.size() != n) {
    throw Error(Errc::ShapeMismatch, "rects have " + std::to_string(rects.w.size()) + " widths and " +
                                         std::to_string(rects.h.size()) + " heights, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rects.w[i] <= 0 || rects.h[i] <= 0) {
      throw Error(Errc::ShapeMismatch, "block " + std::to_string(i + 1) + " has a non-positive side");
    }
  }
}

Relation relation(const Permutation& first, const Permutation& second, Label a, Label b) {
  const bool first_before = first.position(a) < first.position(b);
  const bool second_before = second.position(a) < second.position(b);
  if (first_before && second_before) return Relation::LeftOf;
  if (!first_before && !second_before) return Relation::RightOf;
  if (!first_before && second_before) return Relation::Below;
  return Relation::Above;
}

Placement sp_place(const Permutation& first, const Permutation& second, const RectSpec& rects) {
  const std::size_t n = first.size();
  if (second.size() != n) throw Error(Errc::ShapeMismatch, "sequence pair permutations differ in length");
  validate_rects(rects, n);

  Placement p;
  p.x.assign(n, 0);
  p.y.assign(n, 0);
  // Predecessors under "left of" come earlier in `first`.
  for (std::size_t i = 0; i < n; ++i) {
    const Label b = first[i];
    long long x = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Label a = first[j];
      if (second.position(a) < second.position(b)) {
        x = std::max(x, p.x[static_cast<std::size_t>(a - 1)] + rects.w[static_cast<std::size_t>(a - 1)]);
      }
    }
    p.x[static_cast<std::size_t>(b - 1)] = x;
  }
  // Predecessors under "below" come earlier in `second`.
  for (std::size_t i = 0; i < n; ++i) {
    const Label b = second[i];
    long long y = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Label a = second[j];
      assert(relation(first, second, a, b) == Relation::Below || relation(first, second, a, b) == Relation::LeftOf);
      if (first.position(a) > first.position(b)) {
        y = std::max(y, p.y[static_cast<std::size_t>(a - 1)] + rects.h[static_cast<std::size_t>(a - 1)]);
      }
    }
    p.y[static_cast<std::size_t>(b - 1)] = y;
  }
  for (std::size_t i = 0; i < n; ++i) {
    p.width = std::max(p.width, p.x[i] + rects.w[i]);
    p.height = std::max(p.height, p.y[i] + rects.h[i]);
  }
  return p;
}

bool placement_is_valid(const Placement& p, const RectSpec& rects) {
  const std::size_t n = rects.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x[i] < 0 || p.y[i] < 0 || p.x[i] + rects.w[i] > p.width || p.y[i] + rects.h[i] > p.height) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool apart_x = p.x[i] + rects.w[i] <= p.x[j] || p.x[j] + rects.w[j] <= p.x[i];
      const bool apart_y = p.y[i] + rects.h[i] <= p.y[j] || p.y[j] + rects.h[j] <= p.y[i];
      if (!apart_x && !apart_y) return false;
    }
  }
  return true;
}

namespace {

constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                 "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

}  // namespace

std::string render_svg(const Placement& p, const RectSpec& rects, Label highlight) {
  using S = SvgStyle;
  const long long width_px = p.width * S::kScale + 2 * S::kMargin;
  const long long height_px = p.height * S::kScale + 2 * S::kMargin;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\"" << height_px
      << "\" viewBox=\"0 0 " << width_px << ' ' << height_px << "\">\n";
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto label = static_cast<Label>(i + 1);
    const long long x = S::kMargin + p.x[i] * S::kScale;
    // SVG y grows downwards; flip so that "below" is drawn below.
    const long long y = S::kMargin + (p.height - p.y[i] - rects.h[i]) * S::kScale;
    const long long w = rects.w[i] * S::kScale;
    const long long h = rects.h[i] * S::kScale;
    const int stroke = label == highlight ? S::kHighlightStroke : S::kStroke;
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\""
        << kPalette[i % kPalette.size()] << "\" stroke=\"#000000\" stroke-width=\"" << stroke << "\"/>\n";
    out << "  <text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2 << "\" font-family=\"monospace\" font-size=\"12\""
        << " text-anchor=\"middle\" dominant-baseline=\"central\">" << label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<std::string> render_frames(const Instance& inst, const MovePath& path, const RectSpec& rects,
                                       const std::filesystem::path& out_dir) {
  if (inst.k() != 2) throw Error(Errc::ShapeMismatch, "frames need k=2, got k=" + std::to_string(inst.k()));
  validate_rects(rects, inst.n());
  if (const auto check = verify_path(inst, path); !check) {
    throw Error(Errc::InvalidPath, std::string(path_status_name(check.status)) + " at step " +
                                       std::to_string(check.step));
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + out_dir.string() + ": " + ec.message());

  const auto frames = path_frames(path);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.svg", i);
    const Label highlight = i == 0 ? 0 : path.moves[i - 1].element;
    const Placement p = sp_place(frames[i][0], frames[i][1], rects);
    std::ofstream file(out_dir / name, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::IoError, "cannot write " + (out_dir / name).string());
    file << render_svg(p, rects, highlight);
    if (!file) throw Error(Errc::IoError, "write failed for " + (out_dir / name).string());
    names.emplace_back(name);
  }
  return names;
}

}  // namespace ulamk
