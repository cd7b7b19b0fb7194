#include "supercat/lattice.hpp"

#include "supercat/exact_arith.hpp"

#include <stdexcept>

namespace supercat {

std::string to_string(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

GridPoint LatticePath::point_at(std::size_t i) const {
  if (i > steps_.size()) throw std::out_of_range("point index past end of path");
  const std::size_t right = count_right(i);
  return {origin_.x + static_cast<std::int64_t>(right), origin_.y + static_cast<std::int64_t>(i - right)};
}

std::vector<GridPoint> LatticePath::points() const {
  std::vector<GridPoint> out;
  out.reserve(steps_.size() + 1);
  for_each_point([&](std::size_t, const GridPoint& p) { out.push_back(p); });
  return out;
}

std::size_t LatticePath::count_right(std::size_t n) const {
  if (n > steps_.size()) throw std::out_of_range("step count past end of path");
  return static_cast<std::size_t>(
      std::count(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n), Step::Right));
}

LatticePath LatticePath::prefix(std::size_t n) const {
  if (n > steps_.size()) throw std::out_of_range("prefix longer than path");
  return LatticePath(origin_, std::vector<Step>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n)));
}

LatticePath LatticePath::suffix(std::size_t n) const {
  if (n > steps_.size()) throw std::out_of_range("suffix start past end of path");
  return LatticePath(point_at(n), std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(n), steps_.end()));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step st : steps_) out.push_back(st == Step::Right ? 'R' : 'U');
  return out;
}

LatticePath parse_path(std::string_view text, GridPoint origin) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'R') steps.push_back(Step::Right);
    else if (c == 'U') steps.push_back(Step::Up);
    else throw std::invalid_argument("path string may contain only R and U, got '" + std::string(1, c) + "'");
  }
  return LatticePath(origin, std::move(steps));
}

LatticePath concat(const LatticePath& head, const LatticePath& tail) {
  if (tail.origin() != head.end_point()) {
    throw std::invalid_argument("tail origin " + to_string(tail.origin()) + " does not match head end " +
                                to_string(head.end_point()));
  }
  std::vector<Step> steps = head.steps();
  steps.insert(steps.end(), tail.steps().begin(), tail.steps().end());
  return LatticePath(head.origin(), std::move(steps));
}

LatticePath translate(const LatticePath& path, GridPoint to_origin) { return LatticePath(to_origin, path.steps()); }

// Segments

std::string to_string(SegmentId id) { return "L" + std::to_string(static_cast<int>(id)); }

SegmentId parse_segment_id(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == 'L' || digits.front() == 'l')) digits.remove_prefix(1);
  if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '9') {
    return static_cast<SegmentId>(digits[0] - '0');
  }
  throw std::invalid_argument("unknown segment id: " + std::string(text));
}

DiagSegment::DiagSegment(SegmentId id, std::int64_t m, std::int64_t s) : id_(id) {
  if (m < 0 || s < 0) throw std::invalid_argument("segment parameters must be nonnegative");
  switch (id) {
    case SegmentId::L1: offset_ = +1; first_x_ = 0;          last_x_ = m - 1;         break;
    case SegmentId::L2: offset_ = -1; first_x_ = 1;          last_x_ = m;             break;
    case SegmentId::L3: offset_ = +2; first_x_ = m - 1;      last_x_ = m + s - 1;     break;
    case SegmentId::L4: offset_ = -2; first_x_ = m + 1;      last_x_ = m + s + 1;     break;
    case SegmentId::L5: offset_ = +1; first_x_ = m;          last_x_ = m + s - 1;     break;
    case SegmentId::L6: offset_ = 0;  first_x_ = m;          last_x_ = m + s;         break;
    case SegmentId::L7: offset_ = -1; first_x_ = m + 1;      last_x_ = m + s;         break;
    case SegmentId::L8: offset_ = +3; first_x_ = 0;          last_x_ = m - 2;         break;
    case SegmentId::L9: offset_ = -3; first_x_ = 3;          last_x_ = m + 1;         break;
    default: throw std::invalid_argument("invalid segment id");
  }
}

std::vector<GridPoint> DiagSegment::points() const {
  std::vector<GridPoint> out;
  for (std::int64_t x = first_x_; x <= last_x_; ++x) out.push_back({x, x + offset_});
  return out;
}

std::vector<GridPoint> segment_points(SegmentId id, std::int64_t m, std::int64_t s) {
  return DiagSegment(id, m, s).points();
}

std::pair<GridPoint, GridPoint> segment_endpoints_x2(SegmentId id, std::int64_t m, std::int64_t s) {
  const std::int64_t a = 2 * m;
  const std::int64_t b = 2 * (m + s);
  switch (id) {
    case SegmentId::L1: return {{0, 2}, {a - 1, a + 1}};
    case SegmentId::L2: return {{2, 0}, {a + 1, a - 1}};
    case SegmentId::L3: return {{a - 2, a + 2}, {b - 2, b + 2}};
    case SegmentId::L4: return {{a + 2, a - 2}, {b + 2, b - 2}};
    case SegmentId::L5: return {{a - 1, a + 1}, {b - 1, b + 1}};
    case SegmentId::L6: return {{a, a}, {b, b}};
    case SegmentId::L7: return {{a + 1, a - 1}, {b + 1, b - 1}};
    case SegmentId::L8: return {{0, 6}, {a - 3, a + 3}};
    case SegmentId::L9: return {{6, 0}, {a + 3, a - 3}};
  }
  throw std::invalid_argument("invalid segment id");
}

// Predicates

std::optional<std::size_t> last_visit(const LatticePath& path, const DiagSegment& seg) {
  std::optional<std::size_t> out;
  path.for_each_point([&](std::size_t i, const GridPoint& p) {
    if (seg.contains(p)) out = i;
  });
  return out;
}

std::optional<std::size_t> first_visit(const LatticePath& path, const DiagSegment& seg) {
  std::optional<std::size_t> out;
  path.for_each_point([&](std::size_t i, const GridPoint& p) {
    if (!out && seg.contains(p)) out = i;
  });
  return out;
}

bool intersects(const LatticePath& path, const DiagSegment& seg) {
  if (seg.empty()) return false;
  return first_visit(path, seg).has_value();
}

bool hits_in_order(const LatticePath& path, const DiagSegment& a, const DiagSegment& b) {
  bool seen_a = false;
  bool found = false;
  path.for_each_point([&](std::size_t, const GridPoint& p) {
    if (found) return;
    if (seen_a && b.contains(p)) found = true;
    if (a.contains(p)) seen_a = true;
  });
  return found;
}

bool stays_between(const LatticePath& path, std::int64_t low_offset, std::int64_t high_offset) {
  if (low_offset >= high_offset) throw std::invalid_argument("band requires low_offset < high_offset");
  const auto [lo, hi] = offset_range(path);
  return lo >= low_offset && hi <= high_offset;
}

std::pair<std::int64_t, std::int64_t> offset_range(const LatticePath& path) {
  std::int64_t lo = path.origin().offset();
  std::int64_t hi = lo;
  path.for_each_point([&](std::size_t, const GridPoint& p) {
    lo = std::min(lo, p.offset());
    hi = std::max(hi, p.offset());
  });
  return {lo, hi};
}

LatticePath reflect_after(const LatticePath& path, std::size_t pivot) {
  if (pivot > path.size()) throw std::out_of_range("pivot past end of path");
  std::vector<Step> steps = path.steps();
  for (std::size_t i = pivot; i < steps.size(); ++i) {
    steps[i] = steps[i] == Step::Right ? Step::Up : Step::Right;
  }
  return LatticePath(path.origin(), std::move(steps));
}

LatticePath reflect_tail_after_last(const LatticePath& path, const DiagSegment& seg) {
  const auto pivot = last_visit(path, seg);
  if (!pivot) throw std::invalid_argument("path " + path.to_string() + " never meets " + to_string(seg.id()));
  return reflect_after(path, *pivot);
}

std::int64_t antidiagonal_k(const LatticePath& path, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const auto len = static_cast<std::size_t>(2 * m);
  if (path.size() < len) throw std::invalid_argument("path shorter than 2m steps");
  return static_cast<std::int64_t>(path.count_right(len)) - m;
}

// Enumeration

PathEnumerator::PathEnumerator(GridPoint from, GridPoint to) {
  if (to.x < from.x || to.y < from.y) {
    throw std::invalid_argument("no monotone path from " + to_string(from) + " to " + to_string(to));
  }
  steps_.assign(static_cast<std::size_t>(to.x - from.x), Step::Right);
  steps_.insert(steps_.end(), static_cast<std::size_t>(to.y - from.y), Step::Up);
  current_ = LatticePath(from, steps_);
}

void PathEnumerator::advance() {
  if (done_) return;
  if (std::next_permutation(steps_.begin(), steps_.end())) {
    current_ = LatticePath(current_.origin(), steps_);
  } else {
    done_ = true;
  }
}

BigNat path_count(GridPoint from, GridPoint to) {
  if (to.x < from.x || to.y < from.y) return BigNat(0);
  return binomial((to.x - from.x) + (to.y - from.y), to.x - from.x);
}

std::vector<LatticePath> collect_paths(GridPoint from, GridPoint to) {
  std::vector<LatticePath> out;
  for_each_path(from, to, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

PathFamilySpec::PathFamilySpec(std::int64_t m_, std::int64_t s_, std::int64_t level_) : m(m_), s(s_), level(level_) {
  if (m < 0 || s < 0) throw std::invalid_argument("family parameters must be nonnegative");
  if (level < -2 || level > 2) throw std::out_of_range("family level must lie in -2..2");
}

bool PathFamilySpec::reachable() const {
  const GridPoint a = mid();
  const GridPoint b = end();
  return a.x >= 0 && a.y >= 0 && b.x >= a.x && b.y >= a.y;
}

BigNat PathFamilySpec::cardinality() const { return binomial(2 * m, m + level) * binomial(2 * s, s - 2 * level); }

}  // namespace supercat
