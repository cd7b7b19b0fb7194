// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "supercat/census.hpp"
#include "supercat/exact_arith.hpp"
#include "supercat/interpretations.hpp"
#include "supercat/involution.hpp"
#include "supercat/render.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>

using namespace supercat;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

int failures = 0;

void criterion(int id, const std::string& title, std::optional<double> limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s && secs >= *limit_s) {
    out.ok = false;
    out.note += (out.note.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  if (!out.ok) ++failures;
  char timing[64];
  if (limit_s) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, *limit_s);
  else std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::printf("%s %2d %s (%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), timing,
              out.note.empty() ? "" : ": ", out.note.c_str());
  std::fflush(stdout);
}

std::string at(std::int64_t m, std::int64_t n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

Outcome identities() {
  for (std::int64_t n = 0; n <= 40; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      const BigNat d = super_catalan_direct(m, n);
      if (super_catalan_vonszily(m, n) != d) return fail("von Szily differs at " + at(m, n));
      if (super_catalan_shifted(m, n - m) != d) return fail("shifted form differs at " + at(m, n));
    }
  }
  return {};
}

Outcome catalan_relation() {
  for (std::int64_t n = 0; n <= 50; ++n) {
    BigNat twice = catalan(n);
    twice *= 2;
    if (super_catalan_direct(1, n) != twice) return fail("n=" + std::to_string(n));
  }
  return {};
}

Outcome closed_forms() {
  for (std::int64_t m = 0; m <= 40; ++m)
    for (std::int64_t s = 0; s <= 3; ++s)
      if (closed_form(m, s) != super_catalan_direct(m, m + s)) return fail("m=" + std::to_string(m) + " s=" + std::to_string(s));
  return {};
}

Outcome involution_suite() {
  std::uint64_t paths = 0;
  for (std::int64_t total = 0; total <= 11; ++total) {
    for (std::int64_t m = 0; 2 * m <= total; ++m) {
      const std::int64_t n = total - m;
      std::optional<std::string> bad;
      std::map<std::int64_t, BigNat> fixed;
      SignedBig sum;
      for_each_path({0, 0}, {m + n, m + n}, [&](const LatticePath& p) {
        ++paths;
        if (bad) return;
        const LatticePath q = phi(p, m);
        const std::int64_t k = antidiagonal_k(p, m);
        sum.add_signed(BigNat(1), k % 2 == 0 ? 1 : -1);
        if (phi(q, m) != p) bad = "phi is not an involution on " + p.to_string();
        else if ((q == p) != is_fixed(p, m)) bad = "fixed-set characterization fails on " + p.to_string();
        else if (q == p) fixed[k] += BigNat(1);
        else if (std::abs(antidiagonal_k(q, m) - k) != 1) bad = "sign not reversed on " + p.to_string();
      });
      if (bad) return fail(*bad + " (" + at(m, n) + ")");
      for (std::int64_t k = -m; k <= m; ++k) {
        const BigNat got = fixed.count(k) ? fixed[k] : BigNat(0);
        if (got != fixed_point_formula(m, n, k)) return fail("fixed census at k=" + std::to_string(k) + ", " + at(m, n));
      }
      const SignedBig want(super_catalan_direct(m, n));
      if (sum != want) return fail("signed sum " + sum.to_string() + " at " + at(m, n));
      if (signed_path_sum(m, n) != want) return fail("signed_path_sum at " + at(m, n));
      if (fixed_point_census(m, n) != fixed) return fail("fixed_point_census at " + at(m, n));
    }
  }
  return {true, std::to_string(paths) + " paths"};
}

Outcome theorem31() {
  for (std::int64_t m = 0; m <= 9; ++m)
    for (std::int64_t s = 0; s <= 3; ++s)
      if (count_theorem31(m, s) != super_catalan_direct(m, m + s))
        return fail("brute force at m=" + std::to_string(m) + " s=" + std::to_string(s));
  for (std::int64_t s = 0; s <= 3; ++s) {
    const auto series = fast_count_series(1000, s, CountPredicate::Thm31);
    for (std::int64_t m = 0; m <= 1000; ++m)
      if (series[static_cast<std::size_t>(m)] != super_catalan_direct(m, m + s))
        return fail("DP at m=" + std::to_string(m) + " s=" + std::to_string(s));
  }
  return {};
}

Outcome sub_counts() {
  auto not_l4 = [](const TailFeatures& f) { return !f.hit_l4; };
  auto neither = [](const TailFeatures& f) { return !f.hit_l3 && !f.hit_l4; };
  if (tail_census_dp(2).count_where(not_l4) != BigNat(5)) return fail("s=2 tails avoiding l4");
  if (tail_census_dp(2).count_where(neither) != BigNat(4)) return fail("s=2 tails avoiding both");
  if (tail_census_dp(3).count_where(not_l4) != BigNat(14)) return fail("s=3 tails avoiding l4");
  if (tail_census_dp(3).count_where(neither) != BigNat(8)) return fail("s=3 tails avoiding both");
  for (std::int64_t m = 1; m <= 9; ++m) {
    const HeadCensus c = head_census_dp(m);
    const BigNat cm = catalan(m);
    BigNat both = cm;
    both *= static_cast<std::uint64_t>(m - 1);
    auto cls = [&](bool l1, bool l2) {
      return c.count_where([&](const HeadFeatures& f) { return f.hit_l1 == l1 && f.hit_l2 == l2; });
    };
    if (cls(true, false) != cm || cls(false, true) != cm || cls(true, true) != both)
      return fail("head classes at m=" + std::to_string(m));
  }
  return {};
}

Outcome theorem41() {
  const VariantResolution r = resolve_variant(0, 8);
  if (!r.resolved) return fail(std::string("no unique variant (as-stated ") + (r.as_stated_matches ? "matches" : "fails") +
                               ", order-negated " + (r.order_negated_matches ? "matches" : "fails") + ")");
  const Variant v = *r.resolved;
  if (count_theorem41(1, v) != BigNat(84) || count_theorem41(2, v) != BigNat(198)) return fail("S(1,5) or S(2,6)");
  if (resolve_variant(0, 8).resolved != r.resolved) return fail("resolution unstable");
  const CountPredicate p = v == Variant::AsStated ? CountPredicate::Thm41AsStated : CountPredicate::Thm41OrderNegated;
  const auto series = fast_count_series(1000, 4, p);
  for (std::int64_t m = 0; m <= 1000; ++m)
    if (series[static_cast<std::size_t>(m)] != super_catalan_direct(m, m + 4)) return fail("DP at m=" + std::to_string(m));
  for (std::int64_t m = 0; m <= 8; ++m)
    if (count_s1(m) != count_s2(m)) return fail("|S1| != |S2| at m=" + std::to_string(m));
  return {true, "resolved " + to_string(v)};
}

Outcome injections() {
  for (std::int64_t m = 0; m <= 7; ++m) {
    for (std::int64_t s = 0; s <= 3; ++s) {
      const LineSet lines(m, s);
      std::set<LatticePath> img[2];
      std::size_t domain[2] = {0, 0};
      for (int side = 0; side < 2; ++side) {
        for_each_family_member(PathFamilySpec(m, s, side == 0 ? -1 : 1), [&](const LatticePath& p) {
          ++domain[side];
          img[side].insert(inject_level1(p, m, s));
        });
      }
      std::set<LatticePath> want14, want23;
      for_each_family_member(PathFamilySpec(m, s, 0), [&](const LatticePath& p) {
        if (intersects(p, lines.l1) && intersects(p, lines.l4)) want14.insert(p);
        if (intersects(p, lines.l2) && intersects(p, lines.l3)) want23.insert(p);
      });
      const std::string where = "m=" + std::to_string(m) + " s=" + std::to_string(s);
      if (img[0].size() != domain[0] || img[1].size() != domain[1]) return fail("not injective at " + where);
      if (img[0] != want14 || img[1] != want23) return fail("image mismatch at " + where);
      for (const auto& q : img[0])
        if (img[1].count(q)) return fail("images overlap at " + where);
    }
  }
  for (std::int64_t m = 0; m <= 8; ++m) {
    const BigNat levels = PathFamilySpec(m, 4, -2).cardinality() + PathFamilySpec(m, 4, 2).cardinality();
    if (levels != count_all_four_l1_before_l2(m)) return fail("level 2 count at m=" + std::to_string(m));
    std::set<LatticePath> images;
    std::size_t domain = 0;
    for (std::int64_t level : {-2, 2}) {
      for_each_family_member(PathFamilySpec(m, 4, level), [&](const LatticePath& p) {
        ++domain;
        images.insert(map_level2(p, m, 4).image);
      });
    }
    if (images.size() != domain || BigNat(domain) != levels) return fail("level 2 map at m=" + std::to_string(m));
  }
  return {};
}

Outcome census_cross_check() {
  for (std::int64_t m = 0; m <= 9; ++m)
    if (head_census_dp(m) != brute_head_census(m)) return fail("heads at m=" + std::to_string(m));
  for (std::int64_t s = 0; s <= 4; ++s)
    for (std::int64_t m = 0; m <= 9; ++m)
      if (tail_census_dp(s) != brute_tail_census(s, m))
        return fail("tails at s=" + std::to_string(s) + " m=" + std::to_string(m));
  return {};
}

std::size_t count_lines(const std::string& svg) {
  std::size_t n = 0;
  for (auto pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++n;
  return n;
}

Outcome rendering() {
  RenderSpec fig1;
  fig1.m = 4;
  fig1.s = 3;
  fig1.lines = {SegmentId::L1, SegmentId::L2, SegmentId::L3, SegmentId::L4};
  RenderSpec fig3 = fig1;
  fig3.s = 4;
  fig3.lines.insert(fig3.lines.end(), {SegmentId::L5, SegmentId::L6, SegmentId::L7});
  const std::string a = render_svg(fig1);
  const std::string b = render_svg(fig3);
  if (count_lines(a) != 4) return fail("first configuration has " + std::to_string(count_lines(a)) + " lines");
  if (count_lines(b) != 7) return fail("second configuration has " + std::to_string(count_lines(b)) + " lines");
  if (render_svg(fig1) != a || render_svg(fig3) != b) return fail("output differs between runs");
  return {};
}

}  // namespace

int main() {
  criterion(1, "identity agreement, 0 <= m <= n <= 40", 5.0, identities);
  criterion(2, "S(1,n) = 2 C_n, n <= 50", std::nullopt, catalan_relation);
  criterion(3, "closed forms, s <= 3, m <= 40", std::nullopt, closed_forms);
  criterion(4, "involution suite, m + n <= 11", 120.0, involution_suite);
  criterion(5, "s <= 3 count: brute force m <= 9, DP m <= 1000", 60.0, theorem31);
  criterion(6, "tail and head sub-counts", std::nullopt, sub_counts);
  criterion(7, "s = 4 count: variant resolution m <= 8, DP m <= 1000, |S1| = |S2|", std::nullopt, theorem41);
  criterion(8, "injections: level +-1 for s <= 3, m <= 7; level +-2 for m <= 8", std::nullopt, injections);
  criterion(9, "census cross-check, m <= 9, s <= 4", std::nullopt, census_cross_check);
  criterion(10, "rendering line counts and determinism", std::nullopt, rendering);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
