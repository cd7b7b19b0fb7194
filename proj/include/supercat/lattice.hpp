#pragma once

#include "supercat/bignum.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supercat {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  /// Diagonal offset y - x; the point lies on the line y = x + offset.
  [[nodiscard]] std::int64_t offset() const { return y - x; }

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(const GridPoint& p);

enum class Step : std::uint8_t { Right = 0, Up = 1 };

/// Monotone unit-step path anchored at an origin. Its text form is a string
/// over {R, U}.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(GridPoint origin, std::vector<Step> steps = {})
      : origin_(origin), steps_(std::move(steps)) {}

  [[nodiscard]] const GridPoint& origin() const { return origin_; }
  [[nodiscard]] const std::vector<Step>& steps() const { return steps_; }
  [[nodiscard]] std::size_t size() const { return steps_.size(); }
  [[nodiscard]] bool empty() const { return steps_.empty(); }
  [[nodiscard]] Step step(std::size_t i) const { return steps_[i]; }

  /// The i-th visited point, 0 <= i <= size(); point_at(0) is the origin.
  [[nodiscard]] GridPoint point_at(std::size_t i) const;
  [[nodiscard]] GridPoint end_point() const { return point_at(steps_.size()); }
  [[nodiscard]] std::vector<GridPoint> points() const;

  /// Number of Right steps among the first n steps.
  [[nodiscard]] std::size_t count_right(std::size_t n) const;

  /// Steps [0, n) from the same origin.
  [[nodiscard]] LatticePath prefix(std::size_t n) const;
  /// Steps [n, size()) starting at point_at(n).
  [[nodiscard]] LatticePath suffix(std::size_t n) const;

  /// Calls f(index, point) for every visited point in order.
  template <class F>
  void for_each_point(F&& f) const {
    GridPoint p = origin_;
    f(std::size_t{0}, p);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i] == Step::Right) ++p.x;
      else ++p.y;
      f(i + 1, p);
    }
  }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  GridPoint origin_{};
  std::vector<Step> steps_;
};

/// Parses a step string over {R, U}; any other character throws
/// std::invalid_argument.
LatticePath parse_path(std::string_view text, GridPoint origin = {});

/// head followed by tail; tail.origin() must equal head.end_point().
LatticePath concat(const LatticePath& head, const LatticePath& tail);

/// Same steps, new origin.
LatticePath translate(const LatticePath& path, GridPoint to_origin);

// Diagonal segments

enum class SegmentId : std::uint8_t { L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9 };

std::string to_string(SegmentId id);
SegmentId parse_segment_id(std::string_view text);

/// Lattice points of one of the nine slope-1 segments for given (m, s):
/// points (x, x + offset) for x in [first_x, last_x] (empty if last_x < first_x).
class DiagSegment {
 public:
  DiagSegment(SegmentId id, std::int64_t m, std::int64_t s);

  [[nodiscard]] SegmentId id() const { return id_; }
  [[nodiscard]] std::int64_t offset() const { return offset_; }
  [[nodiscard]] std::int64_t first_x() const { return first_x_; }
  [[nodiscard]] std::int64_t last_x() const { return last_x_; }
  [[nodiscard]] bool empty() const { return last_x_ < first_x_; }

  [[nodiscard]] bool contains(const GridPoint& p) const {
    return p.y - p.x == offset_ && p.x >= first_x_ && p.x <= last_x_;
  }
  [[nodiscard]] std::vector<GridPoint> points() const;

 private:
  SegmentId id_;
  std::int64_t offset_;
  std::int64_t first_x_;
  std::int64_t last_x_;
};

std::vector<GridPoint> segment_points(SegmentId id, std::int64_t m, std::int64_t s);

/// Exact geometric endpoints with both coordinates doubled, so half-integer
/// endpoints such as (m - 1/2, m + 1/2) stay integral.
std::pair<GridPoint, GridPoint> segment_endpoints_x2(SegmentId id, std::int64_t m, std::int64_t s);

// Predicates

/// Index of the last visited point lying on seg, if any.
std::optional<std::size_t> last_visit(const LatticePath& path, const DiagSegment& seg);
std::optional<std::size_t> first_visit(const LatticePath& path, const DiagSegment& seg);

bool intersects(const LatticePath& path, const DiagSegment& seg);

/// Some visit of a strictly precedes some visit of b.
bool hits_in_order(const LatticePath& path, const DiagSegment& a, const DiagSegment& b);

/// Every visited point has low <= y - x <= high.
bool stays_between(const LatticePath& path, std::int64_t low_offset, std::int64_t high_offset);

/// Min and max of y - x over the visited points.
std::pair<std::int64_t, std::int64_t> offset_range(const LatticePath& path);

// Reflections

/// Exchanges Right and Up for every step after visit index `pivot`: the tail
/// is mirrored across the slope-1 line through point_at(pivot).
LatticePath reflect_after(const LatticePath& path, std::size_t pivot);

/// Reflection of the tail after the last visit of seg. std::invalid_argument
/// if the path never visits seg.
LatticePath reflect_tail_after_last(const LatticePath& path, const DiagSegment& seg);

/// Point reflection across y = x + c.
inline GridPoint reflect_point(const GridPoint& p, std::int64_t c) { return {p.y - c, p.x + c}; }

/// (#Right among the first 2m steps) - m.
std::int64_t antidiagonal_k(const LatticePath& path, std::int64_t m);

// Enumeration

/// Lexicographic (R < U) enumeration of monotone paths between two points.
class PathEnumerator {
 public:
  PathEnumerator(GridPoint from, GridPoint to);

  [[nodiscard]] bool done() const { return done_; }
  [[nodiscard]] const LatticePath& operator*() const { return current_; }
  [[nodiscard]] const LatticePath* operator->() const { return &current_; }
  void advance();

 private:
  LatticePath current_;
  std::vector<Step> steps_;
  bool done_ = false;
};

/// Number of monotone paths from -> to, i.e. C(dx + dy, dx).
BigNat path_count(GridPoint from, GridPoint to);

template <class F>
void for_each_path(GridPoint from, GridPoint to, F&& f) {
  for (PathEnumerator it(from, to); !it.done(); it.advance()) f(*it);
}

std::vector<LatticePath> collect_paths(GridPoint from, GridPoint to);

/// Family level i: paths (0,0) -> (m+i, m-i) -> (m+s-i, m+s+i).
struct PathFamilySpec {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::int64_t level = 0;

  PathFamilySpec(std::int64_t m_, std::int64_t s_, std::int64_t level_);

  [[nodiscard]] GridPoint mid() const { return {m + level, m - level}; }
  [[nodiscard]] GridPoint end() const { return {m + s - level, m + s + level}; }
  [[nodiscard]] bool reachable() const;
  /// C(2m, m+i) * C(2s, s-2i).
  [[nodiscard]] BigNat cardinality() const;
  [[nodiscard]] std::size_t path_length() const { return static_cast<std::size_t>(2 * (m + s)); }
};

/// Calls f(path) for every family member, in lexicographic order of head
/// then tail.
template <class F>
void for_each_family_member(const PathFamilySpec& spec, F&& f) {
  if (!spec.reachable()) return;
  const std::vector<LatticePath> tails = [&] {
    std::vector<LatticePath> out;
    for_each_path(spec.mid(), spec.end(), [&](const LatticePath& t) { out.push_back(t); });
    return out;
  }();
  std::vector<Step> buffer;
  buffer.reserve(spec.path_length());
  for_each_path(GridPoint{0, 0}, spec.mid(), [&](const LatticePath& head) {
    for (const LatticePath& tail : tails) {
      buffer.assign(head.steps().begin(), head.steps().end());
      buffer.insert(buffer.end(), tail.steps().begin(), tail.steps().end());
      f(LatticePath(GridPoint{0, 0}, buffer));
    }
  });
}

}  // namespace supercat
