#include "supercat/census.hpp"

#include "supercat/exact_arith.hpp"

#include <stdexcept>

namespace supercat {

namespace {

// Head flag bits
constexpr unsigned kH1 = 1u << 0;
constexpr unsigned kH2 = 1u << 1;
constexpr unsigned kO12 = 1u << 2;
constexpr unsigned kO21 = 1u << 3;
constexpr unsigned kHeadSlots = 16;

// Tail flag bits
constexpr unsigned kT3 = 1u << 0;
constexpr unsigned kT4 = 1u << 1;
constexpr unsigned kO34 = 1u << 2;
constexpr unsigned kO43 = 1u << 3;
constexpr unsigned kB56 = 1u << 4;
constexpr unsigned kB67 = 1u << 5;
constexpr unsigned kTailSlots = 64;

unsigned head_update(unsigned f, std::int64_t offset) {
  if (offset >= 1) {
    if (f & kH2) f |= kO21;
    f |= kH1;
  } else if (offset <= -1) {
    if (f & kH1) f |= kO12;
    f |= kH2;
  }
  return f;
}

unsigned tail_update(unsigned f, std::int64_t offset) {
  if (offset >= 2) {
    if (f & kT4) f |= kO43;
    f |= kT3;
  } else if (offset <= -2) {
    if (f & kT3) f |= kO34;
    f |= kT4;
  }
  if (offset < 0 || offset > 1) f &= ~kB56;
  if (offset < -1 || offset > 0) f &= ~kB67;
  return f;
}

HeadFeatures decode_head(unsigned f) {
  return {(f & kH1) != 0, (f & kH2) != 0, (f & kO12) != 0, (f & kO21) != 0};
}

TailFeatures decode_tail(unsigned f) {
  return {(f & kT3) != 0, (f & kT4) != 0, (f & kO34) != 0, (f & kO43) != 0, (f & kB56) != 0, (f & kB67) != 0};
}

// One layer of the walk: counts indexed by (offset + radius) * slots + flags.
struct Layer {
  std::int64_t radius;
  unsigned slots;
  std::vector<BigNat> cells;

  Layer(std::int64_t r, unsigned n) : radius(r), slots(n), cells(static_cast<std::size_t>(2 * r + 1) * n) {}

  BigNat& at(std::int64_t offset, unsigned flags) {
    return cells[static_cast<std::size_t>(offset + radius) * slots + flags];
  }
};

// Walks 2*steps layers from offset 0 with the given flag transition,
// invoking on_even(layer_index / 2, layer) at every even layer.
template <class Update, class OnEven>
void walk(std::int64_t steps, unsigned slots, unsigned start_flags, Update&& update, OnEven&& on_even) {
  const std::int64_t radius = steps;
  Layer cur(radius, slots);
  Layer next(radius, slots);
  cur.at(0, start_flags) = BigNat(1);
  const std::int64_t layers = 2 * steps;
  for (std::int64_t t = 0;; ++t) {
    const std::int64_t reach = std::min(t, layers - t);  // |offset| bound at layer t
    if (t % 2 == 0) on_even(t / 2, cur);
    if (t == layers) break;
    const std::int64_t next_reach = std::min(t + 1, layers - t - 1);
    for (std::int64_t o = -reach; o <= reach; o += 2) {
      for (unsigned f = 0; f < slots; ++f) {
        BigNat& n = cur.at(o, f);
        if (n.is_zero()) continue;
        for (std::int64_t d : {-1, +1}) {
          const std::int64_t o2 = o + d;
          if (o2 < -next_reach || o2 > next_reach) continue;
          next.at(o2, update(f, o2)) += n;
        }
        n = BigNat(0);
      }
    }
    std::swap(cur, next);
  }
}

HeadFeatures features_from_offsets_head(const LatticePath& path) {
  unsigned f = 0;
  path.for_each_point([&](std::size_t, const GridPoint& p) { f = head_update(f, p.offset() - path.origin().offset()); });
  return decode_head(f);
}

}  // namespace

std::string to_string(const HeadFeatures& f) {
  std::string out;
  auto put = [&](bool b, const char* name) {
    if (!b) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  put(f.hit_l1, "l1");
  put(f.hit_l2, "l2");
  put(f.l1_before_l2, "l1<l2");
  put(f.l2_before_l1, "l2<l1");
  return out.empty() ? "none" : out;
}

std::string to_string(const TailFeatures& f) {
  std::string out;
  auto put = [&](bool b, const char* name) {
    if (!b) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  put(f.hit_l3, "l3");
  put(f.hit_l4, "l4");
  put(f.l3_then_l4, "l3<l4");
  put(f.l4_then_l3, "l4<l3");
  put(f.in_band_56, "band56");
  put(f.in_band_67, "band67");
  return out.empty() ? "none" : out;
}

std::vector<HeadCensus> head_census_series(std::int64_t max_m) {
  if (max_m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<HeadCensus> out(static_cast<std::size_t>(max_m + 1));
  walk(max_m, kHeadSlots, 0u, head_update, [&](std::int64_t m, Layer& layer) {
    HeadCensus& census = out[static_cast<std::size_t>(m)];
    for (unsigned f = 0; f < kHeadSlots; ++f) {
      const BigNat& n = layer.at(0, f);
      if (!n.is_zero()) census.add(decode_head(f), n);
    }
  });
  return out;
}

HeadCensus head_census_dp(std::int64_t m) { return std::move(head_census_series(m).back()); }

TailCensus tail_census_dp(std::int64_t s) {
  if (s < 0 || s > 4) throw std::out_of_range("tail census supports s in 0..4, got " + std::to_string(s));
  TailCensus census;
  walk(s, kTailSlots, kB56 | kB67, tail_update, [&](std::int64_t half, Layer& layer) {
    if (half != s) return;
    for (unsigned f = 0; f < kTailSlots; ++f) {
      const BigNat& n = layer.at(0, f);
      if (!n.is_zero()) census.add(decode_tail(f), n);
    }
  });
  return census;
}

HeadCensus brute_head_census(std::int64_t m, std::uint64_t budget) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  check_budget(path_count({0, 0}, {m, m}), budget, "brute_head_census");
  const DiagSegment l1(SegmentId::L1, m, 0);
  const DiagSegment l2(SegmentId::L2, m, 0);
  std::map<HeadFeatures, std::uint64_t> tally;
  for_each_path({0, 0}, {m, m}, [&](const LatticePath& p) {
    ++tally[HeadFeatures{intersects(p, l1), intersects(p, l2), hits_in_order(p, l1, l2), hits_in_order(p, l2, l1)}];
  });
  HeadCensus out;
  for (const auto& [f, n] : tally) out.add(f, BigNat(n));
  return out;
}

TailCensus brute_tail_census(std::int64_t s, std::int64_t m) {
  if (s < 0 || m < 0) throw std::invalid_argument("m and s must be nonnegative");
  const DiagSegment l3(SegmentId::L3, m, s);
  const DiagSegment l4(SegmentId::L4, m, s);
  std::map<TailFeatures, std::uint64_t> tally;
  for_each_path({m, m}, {m + s, m + s}, [&](const LatticePath& t) {
    ++tally[TailFeatures{intersects(t, l3), intersects(t, l4), hits_in_order(t, l3, l4), hits_in_order(t, l4, l3),
                         s == 0 || stays_between(t, 0, 1), s == 0 || stays_between(t, -1, 0)}];
  });
  TailCensus out;
  for (const auto& [f, n] : tally) out.add(f, BigNat(n));
  return out;
}

HeadFeatures head_features_of(const LatticePath& head) { return features_from_offsets_head(head); }

TailFeatures tail_features_of(const LatticePath& tail) {
  unsigned f = kB56 | kB67;
  tail.for_each_point([&](std::size_t, const GridPoint& p) { f = tail_update(f, p.offset() - tail.origin().offset()); });
  return decode_tail(f);
}

std::string to_string(CountPredicate p) {
  switch (p) {
    case CountPredicate::Thm31: return "thm31";
    case CountPredicate::Thm41AsStated: return "thm41-a";
    case CountPredicate::Thm41OrderNegated: return "thm41-b";
    case CountPredicate::S1: return "s1";
    case CountPredicate::S2: return "s2";
  }
  return "?";
}

CountPredicate parse_count_predicate(std::string_view text) {
  if (text == "thm31") return CountPredicate::Thm31;
  if (text == "thm41-a") return CountPredicate::Thm41AsStated;
  if (text == "thm41-b") return CountPredicate::Thm41OrderNegated;
  if (text == "s1" || text == "S1") return CountPredicate::S1;
  if (text == "s2" || text == "S2") return CountPredicate::S2;
  throw std::invalid_argument("unknown predicate: " + std::string(text));
}

void check_predicate_range(CountPredicate p, std::int64_t s) {
  if (p == CountPredicate::Thm31) {
    if (s < 0 || s > 3) throw std::out_of_range("thm31 requires 0 <= s <= 3, got " + std::to_string(s));
  } else if (s != 4) {
    throw std::out_of_range(to_string(p) + " requires s == 4, got " + std::to_string(s));
  }
}

bool feature_predicate(CountPredicate p, const HeadFeatures& h, const TailFeatures& t) {
  const bool base = !(h.hit_l1 && t.hit_l4) && !(h.hit_l2 && t.hit_l3);
  const bool band = t.in_band_56 || t.in_band_67;
  const bool both_not_12 = h.hit_l1 && h.hit_l2 && !h.l1_before_l2;
  switch (p) {
    case CountPredicate::Thm31: return base;
    case CountPredicate::Thm41AsStated: return base && !(h.l1_before_l2 && band);
    case CountPredicate::Thm41OrderNegated: return base && !(both_not_12 && band);
    case CountPredicate::S1: return both_not_12 && t.hit_l3 && t.hit_l4;
    case CountPredicate::S2: return both_not_12 && band;
  }
  return false;
}

BigNat combine_censuses(const HeadCensus& heads, const TailCensus& tails, CountPredicate p) {
  BigNat out;
  for (const auto& [hf, hn] : heads.counts) {
    BigNat tail_sum;
    for (const auto& [tf, tn] : tails.counts) {
      if (feature_predicate(p, hf, tf)) tail_sum += tn;
    }
    if (!tail_sum.is_zero()) out += hn * tail_sum;
  }
  return out;
}

BigNat fast_count(std::int64_t m, std::int64_t s, CountPredicate p) {
  check_predicate_range(p, s);
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  return combine_censuses(head_census_dp(m), tail_census_dp(s), p);
}

std::vector<BigNat> fast_count_series(std::int64_t max_m, std::int64_t s, CountPredicate p) {
  check_predicate_range(p, s);
  const TailCensus tails = tail_census_dp(s);
  std::vector<BigNat> out;
  for (const HeadCensus& heads : head_census_series(max_m)) out.push_back(combine_censuses(heads, tails, p));
  return out;
}

}  // namespace supercat
