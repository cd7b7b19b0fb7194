#include "supercat/interpretations.hpp"

#include "supercat/exact_arith.hpp"

#include <stdexcept>

namespace supercat {

std::string to_string(Variant v) { return v == Variant::AsStated ? "as-stated" : "order-negated"; }

Variant parse_variant(std::string_view text) {
  if (text == "as-stated" || text == "a") return Variant::AsStated;
  if (text == "order-negated" || text == "b") return Variant::OrderNegated;
  throw std::invalid_argument("unknown variant: " + std::string(text));
}

void InterpretationParams::validate() const {
  if (m < 0 || s < 0) throw std::invalid_argument("m and s must be nonnegative");
  if (s > 4) throw std::out_of_range("interpretations exist only for s <= 4");
}

LineSet::LineSet(std::int64_t m, std::int64_t s)
    : l1(SegmentId::L1, m, s), l2(SegmentId::L2, m, s), l3(SegmentId::L3, m, s),
      l4(SegmentId::L4, m, s), l5(SegmentId::L5, m, s), l6(SegmentId::L6, m, s),
      l7(SegmentId::L7, m, s), l8(SegmentId::L8, m, s), l9(SegmentId::L9, m, s) {}

bool is_path0_member(const LatticePath& path, std::int64_t m, std::int64_t s) {
  if (m < 0 || s < 0) return false;
  if (path.origin() != GridPoint{0, 0}) return false;
  if (path.size() != static_cast<std::size_t>(2 * (m + s))) return false;
  return path.point_at(static_cast<std::size_t>(2 * m)) == GridPoint{m, m} &&
         path.end_point() == GridPoint{m + s, m + s};
}

std::optional<std::int64_t> family_level(const LatticePath& path, std::int64_t m, std::int64_t s) {
  if (m < 0 || s < 0 || path.origin() != GridPoint{0, 0}) return std::nullopt;
  if (path.size() != static_cast<std::size_t>(2 * (m + s))) return std::nullopt;
  const GridPoint mid = path.point_at(static_cast<std::size_t>(2 * m));
  const std::int64_t level = mid.x - m;
  if (level < -2 || level > 2) return std::nullopt;
  const PathFamilySpec spec(m, s, level);
  if (mid != spec.mid() || path.end_point() != spec.end()) return std::nullopt;
  return level;
}

namespace {

void require_path0(const LatticePath& path, std::int64_t m, std::int64_t s) {
  if (!is_path0_member(path, m, s)) {
    throw std::invalid_argument("path " + path.to_string() + " is not in Path_0 for m=" + std::to_string(m) +
                                ", s=" + std::to_string(s));
  }
}

LatticePath tail_of(const LatticePath& path, std::int64_t m) { return path.suffix(static_cast<std::size_t>(2 * m)); }
LatticePath head_of(const LatticePath& path, std::int64_t m) { return path.prefix(static_cast<std::size_t>(2 * m)); }

bool thm31_base(const LatticePath& path, const LineSet& lines) {
  const bool h1 = intersects(path, lines.l1);
  const bool h2 = intersects(path, lines.l2);
  const bool h3 = intersects(path, lines.l3);
  const bool h4 = intersects(path, lines.l4);
  return !(h1 && h4) && !(h2 && h3);
}

bool tail_in_band(const LatticePath& path, std::int64_t m) {
  const LatticePath tail = tail_of(path, m);
  return stays_between(tail, 0, 1) || stays_between(tail, -1, 0);
}

bool thm41_unchecked(const LatticePath& path, std::int64_t m, const LineSet& lines, Variant variant) {
  if (!thm31_base(path, lines)) return false;
  bool order_condition = false;
  if (variant == Variant::AsStated) {
    order_condition = hits_in_order(path, lines.l1, lines.l2);
  } else {
    order_condition = intersects(path, lines.l1) && intersects(path, lines.l2) &&
                      !hits_in_order(path, lines.l1, lines.l2);
  }
  return !(order_condition && tail_in_band(path, m));
}

bool s1_unchecked(const LatticePath& path, const LineSet& lines) {
  return intersects(path, lines.l1) && intersects(path, lines.l2) && intersects(path, lines.l3) &&
         intersects(path, lines.l4) && !hits_in_order(path, lines.l1, lines.l2);
}

bool s2_unchecked(const LatticePath& path, std::int64_t m, const LineSet& lines) {
  return intersects(path, lines.l1) && intersects(path, lines.l2) && !hits_in_order(path, lines.l1, lines.l2) &&
         tail_in_band(path, m);
}

template <class Pred>
BigNat count_path0(std::int64_t m, std::int64_t s, std::uint64_t budget, const char* what, Pred&& pred) {
  const PathFamilySpec spec(m, s, 0);
  check_budget(spec.cardinality(), budget, what);
  std::uint64_t count = 0;
  for_each_family_member(spec, [&](const LatticePath& p) {
    if (pred(p)) ++count;
  });
  return BigNat(count);
}

void require_s4(std::int64_t s) {
  if (s != 4) throw std::out_of_range("the s = 4 interpretation requires s == 4, got " + std::to_string(s));
}

void require_s_le3(std::int64_t s) {
  if (s < 0 || s > 3) throw std::out_of_range("the level-1 interpretation requires 0 <= s <= 3, got " + std::to_string(s));
}

}  // namespace

bool theorem31_predicate(const LatticePath& path, std::int64_t m, std::int64_t s) {
  require_s_le3(s);
  require_path0(path, m, s);
  return thm31_base(path, LineSet(m, s));
}

BigNat count_theorem31(std::int64_t m, std::int64_t s, std::uint64_t budget) {
  require_s_le3(s);
  const LineSet lines(m, s);
  return count_path0(m, s, budget, "count_theorem31", [&](const LatticePath& p) { return thm31_base(p, lines); });
}

LatticePath inject_level1(const LatticePath& path, std::int64_t m, std::int64_t s) {
  require_s_le3(s);
  const auto level = family_level(path, m, s);
  if (!level || (*level != -1 && *level != 1)) {
    throw std::invalid_argument("path " + path.to_string() + " is not a level -1/+1 family member");
  }
  const LineSet lines(m, s);
  const DiagSegment& head_line = *level == -1 ? lines.l1 : lines.l2;
  const DiagSegment& tail_line = *level == -1 ? lines.l4 : lines.l3;

  const LatticePath head = reflect_tail_after_last(head_of(path, m), head_line);
  const LatticePath moved = translate(tail_of(path, m), {m, m});
  const LatticePath tail = reflect_tail_after_last(moved, tail_line);
  return concat(head, tail);
}

LatticePath uninject_level1(const LatticePath& image, std::int64_t m, std::int64_t s, std::int64_t level) {
  require_s_le3(s);
  if (level != -1 && level != 1) throw std::invalid_argument("level must be -1 or +1");
  require_path0(image, m, s);
  const LineSet lines(m, s);
  const DiagSegment& head_line = level == -1 ? lines.l1 : lines.l2;
  const DiagSegment& tail_line = level == -1 ? lines.l4 : lines.l3;

  const LatticePath head = reflect_tail_after_last(head_of(image, m), head_line);
  const LatticePath tail = reflect_tail_after_last(tail_of(image, m), tail_line);
  return concat(head, translate(tail, head.end_point()));
}

std::string to_string(TailClass c) {
  switch (c) {
    case TailClass::AvoidsBoth: return "avoids-both";
    case TailClass::L3Only: return "l3-only";
    case TailClass::L4Only: return "l4-only";
    case TailClass::L3ThenL4: return "l3-then-l4";
    case TailClass::L4ThenL3: return "l4-then-l3";
  }
  return "?";
}

TailClass classify_tail(const LatticePath& tail) {
  const GridPoint o = tail.origin();
  if (o.x != o.y || o.x < 0 || tail.size() % 2 != 0) {
    throw std::invalid_argument("tail must start at a diagonal point (m,m) and have even length");
  }
  const std::int64_t m = o.x;
  const auto s = static_cast<std::int64_t>(tail.size() / 2);
  if (tail.end_point() != GridPoint{m + s, m + s}) {
    throw std::invalid_argument("tail must end at (m+s, m+s)");
  }
  const DiagSegment l3(SegmentId::L3, m, s);
  const DiagSegment l4(SegmentId::L4, m, s);
  const auto f3 = first_visit(tail, l3);
  const auto f4 = first_visit(tail, l4);
  if (f3 && f4) return *f3 < *f4 ? TailClass::L3ThenL4 : TailClass::L4ThenL3;
  if (f3) return TailClass::L3Only;
  if (f4) return TailClass::L4Only;
  return TailClass::AvoidsBoth;
}

LatticePath canonical_tail(TailClass c, std::int64_t m, std::int64_t s) {
  require_s4(s);
  if (c == TailClass::L3ThenL4) return parse_path("UURRRRUU", {m, m});
  if (c == TailClass::L4ThenL3) return parse_path("RRUUUURR", {m, m});
  throw std::invalid_argument("canonical tails exist only for the two-line classes");
}

Level2Image map_level2(const LatticePath& path, std::int64_t m, std::int64_t s) {
  require_s4(s);
  const auto level = family_level(path, m, s);
  if (!level || (*level != -2 && *level != 2)) {
    throw std::invalid_argument("path " + path.to_string() + " is not a level -2/+2 family member");
  }
  const LineSet lines(m, s);
  const DiagSegment& outer = *level == -2 ? lines.l8 : lines.l9;
  const DiagSegment& inner = *level == -2 ? lines.l1 : lines.l2;

  LatticePath head = head_of(path, m);
  const auto outer_pivot = last_visit(head, outer);
  if (!outer_pivot) throw std::logic_error("level-2 head misses its outer line: " + head.to_string());
  head = reflect_after(head, *outer_pivot);

  std::optional<std::size_t> inner_pivot;
  head.for_each_point([&](std::size_t i, const GridPoint& p) {
    if (i < *outer_pivot && inner.contains(p)) inner_pivot = i;
  });
  if (!inner_pivot) throw std::logic_error("level-2 head misses its inner line: " + head.to_string());
  head = reflect_after(head, *inner_pivot);

  const TailClass cls = *level == -2 ? TailClass::L3ThenL4 : TailClass::L4ThenL3;
  return {concat(head, canonical_tail(cls, m, s)), *level, *outer_pivot, *inner_pivot};
}

LatticePath unmap_level2(const LatticePath& image, std::int64_t m, std::int64_t s, std::int64_t level) {
  require_s4(s);
  if (level != -2 && level != 2) throw std::invalid_argument("level must be -2 or +2");
  require_path0(image, m, s);
  const LineSet lines(m, s);
  // In the image the old outer pivot is the last visit of the opposite
  // near line, and the inner pivot is the last near-line visit before it.
  const DiagSegment& inner = level == -2 ? lines.l1 : lines.l2;
  const DiagSegment& mirror = level == -2 ? lines.l2 : lines.l1;

  LatticePath head = head_of(image, m);
  const auto outer_pivot = last_visit(head, mirror);
  if (!outer_pivot) throw std::invalid_argument("not a level-2 image: " + image.to_string());
  std::optional<std::size_t> inner_pivot;
  head.for_each_point([&](std::size_t i, const GridPoint& p) {
    if (i < *outer_pivot && inner.contains(p)) inner_pivot = i;
  });
  if (!inner_pivot) throw std::invalid_argument("not a level-2 image: " + image.to_string());
  head = reflect_after(reflect_after(head, *inner_pivot), *outer_pivot);

  const PathFamilySpec spec(m, s, level);
  std::vector<Step> tail(8, level == -2 ? Step::Right : Step::Up);
  return concat(head, LatticePath(spec.mid(), std::move(tail)));
}

bool theorem41_predicate(const LatticePath& path, std::int64_t m, Variant variant) {
  require_path0(path, m, 4);
  return thm41_unchecked(path, m, LineSet(m, 4), variant);
}

BigNat count_theorem41(std::int64_t m, Variant variant, std::uint64_t budget) {
  const LineSet lines(m, 4);
  return count_path0(m, 4, budget, "count_theorem41",
                     [&](const LatticePath& p) { return thm41_unchecked(p, m, lines, variant); });
}

bool in_s1(const LatticePath& path, std::int64_t m) {
  require_path0(path, m, 4);
  return s1_unchecked(path, LineSet(m, 4));
}

bool in_s2(const LatticePath& path, std::int64_t m) {
  require_path0(path, m, 4);
  return s2_unchecked(path, m, LineSet(m, 4));
}

BigNat count_s1(std::int64_t m, std::uint64_t budget) {
  const LineSet lines(m, 4);
  return count_path0(m, 4, budget, "count_s1", [&](const LatticePath& p) { return s1_unchecked(p, lines); });
}

BigNat count_s2(std::int64_t m, std::uint64_t budget) {
  const LineSet lines(m, 4);
  return count_path0(m, 4, budget, "count_s2", [&](const LatticePath& p) { return s2_unchecked(p, m, lines); });
}

BigNat count_all_four_l1_before_l2(std::int64_t m, std::uint64_t budget) {
  const LineSet lines(m, 4);
  return count_path0(m, 4, budget, "count_all_four_l1_before_l2", [&](const LatticePath& p) {
    return intersects(p, lines.l3) && intersects(p, lines.l4) && hits_in_order(p, lines.l1, lines.l2);
  });
}

LatticePath pair_s1_to_s2(const LatticePath& path, std::int64_t m) {
  if (!in_s1(path, m)) throw std::invalid_argument("path " + path.to_string() + " is not in S1");
  const TailClass cls = classify_tail(tail_of(path, m));
  const char* band_tail = cls == TailClass::L4ThenL3 ? "URURURUR" : "RURURURU";
  return concat(head_of(path, m), parse_path(band_tail, {m, m}));
}

VariantResolution resolve_variant(std::int64_t m_lo, std::int64_t m_hi, std::uint64_t budget) {
  if (m_lo < 0 || m_hi < m_lo) throw std::invalid_argument("invalid m range");
  VariantResolution out;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const BigNat expected = super_catalan_direct(m, m + 4);
    out.as_stated_matches = out.as_stated_matches && count_theorem41(m, Variant::AsStated, budget) == expected;
    out.order_negated_matches =
        out.order_negated_matches && count_theorem41(m, Variant::OrderNegated, budget) == expected;
  }
  if (out.as_stated_matches != out.order_negated_matches) {
    out.resolved = out.as_stated_matches ? Variant::AsStated : Variant::OrderNegated;
  }
  return out;
}

bool path_predicate(std::string_view name, const LatticePath& path, std::int64_t m, std::int64_t s) {
  if (name == "thm31") return theorem31_predicate(path, m, s);
  if (name == "thm41-a" || name == "thm41-b") {
    require_s4(s);
    return theorem41_predicate(path, m, name == "thm41-a" ? Variant::AsStated : Variant::OrderNegated);
  }
  if (name == "s1") {
    require_s4(s);
    return in_s1(path, m);
  }
  if (name == "s2") {
    require_s4(s);
    return in_s2(path, m);
  }
  throw std::invalid_argument("unknown predicate: " + std::string(name));
}

}  // namespace supercat
