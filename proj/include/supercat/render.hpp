#pragma once

#include "supercat/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supercat {

/// What to draw: the unit grid, the requested diagonal segments between
/// their exact (possibly half-integer) endpoints, and path overlays.
struct RenderSpec {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::vector<SegmentId> lines;
  std::vector<LatticePath> paths;
  std::int64_t width = 0;   // grid units; 0 picks a width that fits everything
  std::int64_t height = 0;  // grid units; 0 picks a height that fits everything
  std::int64_t cell = 40;   // pixels per grid unit, even
  bool grid = true;

  /// std::invalid_argument if a line is degenerate for (m, s) or the canvas
  /// is unusable.
  void validate() const;
};

/// Deterministic SVG document. Segments are the only <line> elements and
/// each path is a single <polyline>.
std::string render_svg(const RenderSpec& spec);

}  // namespace supercat
