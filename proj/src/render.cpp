#include "supercat/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supercat {

namespace {

constexpr const char* kLineColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                       "#8c564b", "#e377c2", "#17becf", "#bcbd22"};
constexpr const char* kPathColors[] = {"#000000", "#555555", "#0b6e4f", "#7a1f5c"};

struct Extent {
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;
};

Extent content_extent(const RenderSpec& spec) {
  // Doubled coordinates, rounded up to whole grid units on return.
  Extent e{2 * (spec.m + spec.s), 2 * (spec.m + spec.s)};
  for (SegmentId id : spec.lines) {
    const auto [a, b] = segment_endpoints_x2(id, spec.m, spec.s);
    e.max_x = std::max({e.max_x, a.x, b.x});
    e.max_y = std::max({e.max_y, a.y, b.y});
  }
  for (const LatticePath& p : spec.paths) {
    p.for_each_point([&](std::size_t, const GridPoint& q) {
      e.max_x = std::max(e.max_x, 2 * q.x);
      e.max_y = std::max(e.max_y, 2 * q.y);
    });
  }
  return {(e.max_x + 1) / 2 + 1, (e.max_y + 1) / 2 + 1};
}

}  // namespace

void RenderSpec::validate() const {
  if (m < 0 || s < 0) throw std::invalid_argument("m and s must be nonnegative");
  if (cell < 2 || cell % 2 != 0) throw std::invalid_argument("cell size must be an even number >= 2");
  if (width < 0 || height < 0) throw std::invalid_argument("canvas size must be nonnegative");
  for (SegmentId id : lines) {
    const auto [a, b] = segment_endpoints_x2(id, m, s);
    if (b.x <= a.x) {
      throw std::invalid_argument(to_string(id) + " is degenerate for m=" + std::to_string(m) +
                                  ", s=" + std::to_string(s));
    }
  }
  for (const LatticePath& p : paths) {
    if (p.origin().x < 0 || p.origin().y < 0) throw std::invalid_argument("path origins must be nonnegative");
  }
}

std::string render_svg(const RenderSpec& spec) {
  spec.validate();
  const Extent fit = content_extent(spec);
  const std::int64_t w = spec.width > 0 ? spec.width : fit.max_x;
  const std::int64_t h = spec.height > 0 ? spec.height : fit.max_y;
  const std::int64_t cell = spec.cell;
  const std::int64_t margin = cell;
  // Doubled grid coordinates to pixels; y grows upward on the grid.
  auto px = [&](std::int64_t x2) { return margin + x2 * cell / 2; };
  auto py = [&](std::int64_t y2) { return margin + (2 * h - y2) * cell / 2; };

  std::ostringstream os;
  const std::int64_t W = 2 * margin + w * cell;
  const std::int64_t H = 2 * margin + h * cell;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"#ffffff\"/>\n";

  if (spec.grid) {
    os << "<path class=\"grid\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\" d=\"";
    for (std::int64_t x = 0; x <= w; ++x) os << 'M' << px(2 * x) << ' ' << py(0) << 'V' << py(2 * h);
    for (std::int64_t y = 0; y <= h; ++y) os << 'M' << px(0) << ' ' << py(2 * y) << 'H' << px(2 * w);
    os << "\"/>\n";
  }

  for (SegmentId id : spec.lines) {
    const auto [a, b] = segment_endpoints_x2(id, spec.m, spec.s);
    const char* color = kLineColors[static_cast<int>(id) - 1];
    os << "<line class=\"segment\" id=\"" << to_string(id) << "\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y)
       << "\" x2=\"" << px(b.x) << "\" y2=\"" << py(b.y) << "\" stroke=\"" << color
       << "\" stroke-width=\"3\" stroke-dasharray=\"8 4\"/>\n";
    os << "<text x=\"" << px(b.x) + 4 << "\" y=\"" << py(b.y) - 4 << "\" font-family=\"serif\" font-size=\""
       << cell / 2 << "\" fill=\"" << color << "\">&#8467;" << static_cast<int>(id) << "</text>\n";
  }

  for (std::size_t i = 0; i < spec.paths.size(); ++i) {
    const LatticePath& p = spec.paths[i];
    os << "<polyline class=\"path\" fill=\"none\" stroke=\"" << kPathColors[i % std::size(kPathColors)]
       << "\" stroke-width=\"4\" points=\"";
    p.for_each_point([&](std::size_t k, const GridPoint& q) {
      if (k > 0) os << ' ';
      os << px(2 * q.x) << ',' << py(2 * q.y);
    });
    os << "\"/>\n";
  }

  // Anchor points (m,m) and (m+s,m+s).
  for (std::int64_t v : {spec.m, spec.m + spec.s}) {
    os << "<circle cx=\"" << px(2 * v) << "\" cy=\"" << py(2 * v) << "\" r=\"" << cell / 8
       << "\" fill=\"#000000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace supercat
