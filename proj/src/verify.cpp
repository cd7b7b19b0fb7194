#include "supercat/verify.hpp"

#include "supercat/census.hpp"
#include "supercat/errors.hpp"
#include "supercat/exact_arith.hpp"

#include <json.hpp>

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace supercat {

namespace {

using Json = nlohmann::ordered_json;

struct KindName {
  CampaignKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {CampaignKind::Identities, "identities"}, {CampaignKind::Involution, "involution"},
    {CampaignKind::Thm31, "thm31"},           {CampaignKind::Thm41, "thm41"},
    {CampaignKind::Injections, "injections"}, {CampaignKind::CensusCrossCheck, "census"},
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("not an integer: " + std::string(text));
  return v;
}

bool uses_brute(Engine e) { return e == Engine::Brute || e == Engine::Both; }
bool uses_dp(Engine e) { return e == Engine::DP || e == Engine::Both; }

// Collects failure notes; the first note becomes the case detail.
class Notes {
 public:
  void fail(std::string note) {
    ok_ = false;
    notes_.push_back(std::move(note));
  }
  void check(bool cond, const std::string& note) {
    if (!cond) fail(note);
  }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] std::string joined() const {
    std::string out;
    for (const auto& n : notes_) {
      if (!out.empty()) out += "; ";
      out += n;
    }
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> notes_;
};

CaseResult make_case(std::int64_t m, std::int64_t s, const BigNat& expected, const std::string& actual,
                     const Notes& notes, std::string info = {}) {
  CaseResult c;
  c.m = m;
  c.s = s;
  c.expected = expected.to_string();
  c.actual = actual;
  c.pass = notes.ok();
  c.detail = notes.ok() ? std::move(info) : notes.joined();
  return c;
}

CaseResult budget_case(std::int64_t m, std::int64_t s, const BigNat& expected, const BudgetExceeded& e) {
  CaseResult c;
  c.m = m;
  c.s = s;
  c.expected = expected.to_string();
  c.actual = "";
  c.pass = false;
  c.detail = std::string("budget exceeded: ") + e.what();
  return c;
}

void check_ranges(const Campaign& c) {
  if (c.m_range.lo < 0 || c.m_range.hi < c.m_range.lo) throw std::invalid_argument("invalid m range");
  if (c.s_range.lo < 0 || c.s_range.hi < c.s_range.lo) throw std::invalid_argument("invalid s range");
  switch (c.kind) {
    case CampaignKind::Thm31:
      if (c.s_range.hi > 3) throw std::invalid_argument("thm31 campaigns require s <= 3");
      break;
    case CampaignKind::Thm41:
      if (c.s_range.lo != 4 || c.s_range.hi != 4) throw std::invalid_argument("thm41 campaigns require s = 4");
      break;
    case CampaignKind::Injections:
    case CampaignKind::CensusCrossCheck:
      if (c.s_range.hi > 4) throw std::invalid_argument("campaign requires s <= 4");
      break;
    default:
      break;
  }
}

// Identities

CaseResult identities_case(std::int64_t m, std::int64_t s) {
  const std::int64_t n = m + s;
  const BigNat expected = super_catalan_direct(m, n);
  const BigNat vs = super_catalan_vonszily(m, n);
  Notes notes;
  notes.check(vs == expected, "vonszily(m,n)=" + vs.to_string());
  const BigNat vs_swapped = super_catalan_vonszily(n, m);
  notes.check(vs_swapped == expected, "vonszily(n,m)=" + vs_swapped.to_string());
  const BigNat shifted = super_catalan_shifted(m, s);
  notes.check(shifted == expected, "shifted(m,s)=" + shifted.to_string());
  const BigNat direct_swapped = super_catalan_direct(n, m);
  notes.check(direct_swapped == expected, "direct(n,m)=" + direct_swapped.to_string());
  return make_case(m, s, expected, vs.to_string(), notes);
}

// Involution

CaseResult involution_case(std::int64_t m, std::int64_t s, const HarnessOptions& opt) {
  const std::int64_t n = m + s;
  const BigNat expected = super_catalan_direct(m, n);
  try {
    check_budget(path_count({0, 0}, {m + n, m + n}), opt.budget, "involution");
    Notes notes;
    std::optional<std::string> witness;
    std::uint64_t fixed = 0;
    for_each_path({0, 0}, {m + n, m + n}, [&](const LatticePath& p) {
      if (witness) return;
      const LatticePath q = phi(p, m);
      if (phi(q, m) != p) witness = "phi(phi(p)) != p at " + p.to_string();
      else if ((q == p) != is_fixed(p, m)) witness = "fixed-point characterization fails at " + p.to_string();
      else if (q != p) {
        const std::int64_t d = antidiagonal_k(q, m) - antidiagonal_k(p, m);
        if (d != 1 && d != -1) witness = "phi does not reverse sign at " + p.to_string();
      }
      if (q == p) ++fixed;
    });
    if (witness) notes.fail(*witness);

    const auto census = fixed_point_census(m, n, opt.budget);
    BigNat census_total;
    SignedBig census_signed;
    for (std::int64_t k = -m; k <= m; ++k) {
      const auto it = census.find(k);
      const BigNat got = it == census.end() ? BigNat(0) : it->second;
      const BigNat want = fixed_point_formula(m, n, k);
      notes.check(got == want, "census at k=" + std::to_string(k) + " is " + got.to_string() + ", formula " +
                                   want.to_string());
      census_total += got;
      census_signed.add_signed(got, k % 2 == 0 ? +1 : -1);
    }
    notes.check(census.size() <= static_cast<std::size_t>(2 * m + 1), "census has k outside [-m, m]");
    notes.check(census_total == BigNat(fixed), "census total disagrees with fixed-point scan");
    notes.check(census_signed == SignedBig(expected), "signed census total " + census_signed.to_string());

    const SignedBig sum = signed_path_sum(m, n, opt.budget);
    notes.check(sum == SignedBig(expected), "signed path sum " + sum.to_string());
    return make_case(m, s, expected, sum.to_string(), notes, "fixed=" + std::to_string(fixed));
  } catch (const BudgetExceeded& e) {
    return budget_case(m, s, expected, e);
  }
}

// Thm 3.1

CaseResult thm31_case(std::int64_t m, std::int64_t s, Engine engine, const std::vector<BigNat>* dp_series,
                      const HarnessOptions& opt) {
  const BigNat expected = super_catalan_direct(m, m + s);
  try {
    Notes notes;
    std::optional<BigNat> brute;
    std::optional<BigNat> dp;
    if (uses_brute(engine)) {
      brute = count_theorem31(m, s, opt.budget);
      notes.check(*brute == expected, "brute count " + brute->to_string());
    }
    if (uses_dp(engine)) {
      dp = (*dp_series)[static_cast<std::size_t>(m)];
      notes.check(*dp == expected, "dp count " + dp->to_string());
    }
    if (brute && dp && *brute != *dp) {
      const auto w = find_witness(m, s, CountPredicate::Thm31,
                                  [&](const LatticePath& p) { return theorem31_predicate(p, m, s); });
      notes.fail("engines disagree; witness " + w.value_or("none (aggregation fault)"));
    }
    const BigNat& actual = brute ? *brute : *dp;
    return make_case(m, s, expected, actual.to_string(), notes);
  } catch (const BudgetExceeded& e) {
    return budget_case(m, s, expected, e);
  }
}

// Thm 4.1

struct Thm41Counts {
  std::optional<BigNat> brute_a, brute_b, brute_s1, brute_s2;
  std::optional<BigNat> dp_a, dp_b, dp_s1, dp_s2;
  std::optional<std::string> budget_error;
};

bool variant_matches(const Thm41Counts& c, Variant v, const BigNat& expected) {
  const auto& b = v == Variant::AsStated ? c.brute_a : c.brute_b;
  const auto& d = v == Variant::AsStated ? c.dp_a : c.dp_b;
  if (c.budget_error) return false;
  return (!b || *b == expected) && (!d || *d == expected);
}

std::vector<CaseResult> thm41_cases(const Campaign& c, const HarnessOptions& opt, ReportSummary& summary) {
  std::vector<std::int64_t> ms;
  for (std::int64_t m = c.m_range.lo; m <= c.m_range.hi; ++m) ms.push_back(m);

  std::vector<HeadCensus> heads;
  if (uses_dp(c.engine)) heads = head_census_series(c.m_range.hi);
  const TailCensus tails = tail_census_dp(4);

  std::vector<Thm41Counts> counts(ms.size());
  std::vector<BigNat> expected(ms.size());
  bool a_all = true;
  bool b_all = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::int64_t m = ms[i];
    expected[i] = super_catalan_direct(m, m + 4);
    Thm41Counts& k = counts[i];
    if (uses_brute(c.engine)) {
      try {
        k.brute_a = count_theorem41(m, Variant::AsStated, opt.budget);
        k.brute_b = count_theorem41(m, Variant::OrderNegated, opt.budget);
        k.brute_s1 = count_s1(m, opt.budget);
        k.brute_s2 = count_s2(m, opt.budget);
      } catch (const BudgetExceeded& e) {
        k.budget_error = e.what();
      }
    }
    if (uses_dp(c.engine)) {
      const HeadCensus& h = heads[static_cast<std::size_t>(m)];
      k.dp_a = combine_censuses(h, tails, CountPredicate::Thm41AsStated);
      k.dp_b = combine_censuses(h, tails, CountPredicate::Thm41OrderNegated);
      k.dp_s1 = combine_censuses(h, tails, CountPredicate::S1);
      k.dp_s2 = combine_censuses(h, tails, CountPredicate::S2);
    }
    a_all = a_all && variant_matches(k, Variant::AsStated, expected[i]);
    b_all = b_all && variant_matches(k, Variant::OrderNegated, expected[i]);
  }
  if (a_all != b_all) summary.resolved_variant = a_all ? Variant::AsStated : Variant::OrderNegated;

  std::vector<CaseResult> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::int64_t m = ms[i];
    const Thm41Counts& k = counts[i];
    if (k.budget_error) {
      out.push_back(budget_case(m, 4, expected[i], BudgetExceeded(*k.budget_error)));
      continue;
    }
    Notes notes;
    const Variant shown = summary.resolved_variant.value_or(Variant::OrderNegated);
    if (!summary.resolved_variant && !(a_all && b_all)) notes.fail("no variant matches S(m, m+4) on the whole range");
    if (!variant_matches(k, shown, expected[i])) notes.fail(to_string(shown) + " count differs from S(m, m+4)");
    if (k.brute_s1) notes.check(*k.brute_s1 == *k.brute_s2, "brute |S1|=" + k.brute_s1->to_string() + " != |S2|=" + k.brute_s2->to_string());
    if (k.dp_s1) notes.check(*k.dp_s1 == *k.dp_s2, "dp |S1|=" + k.dp_s1->to_string() + " != |S2|=" + k.dp_s2->to_string());
    if (k.brute_a && k.dp_a) {
      if (*k.brute_a != *k.dp_a || *k.brute_b != *k.dp_b) {
        const CountPredicate p = *k.brute_a != *k.dp_a ? CountPredicate::Thm41AsStated : CountPredicate::Thm41OrderNegated;
        const Variant v = p == CountPredicate::Thm41AsStated ? Variant::AsStated : Variant::OrderNegated;
        const auto w = find_witness(m, 4, p, [&](const LatticePath& path) { return theorem41_predicate(path, m, v); });
        notes.fail("engines disagree; witness " + w.value_or("none (aggregation fault)"));
      }
      if (*k.brute_s1 != *k.dp_s1) notes.fail("engines disagree on |S1|");
    }
    const auto& shown_brute = shown == Variant::AsStated ? k.brute_a : k.brute_b;
    const auto& shown_dp = shown == Variant::AsStated ? k.dp_a : k.dp_b;
    const BigNat actual = shown_brute ? *shown_brute : *shown_dp;
    const BigNat& a = k.brute_a ? *k.brute_a : *k.dp_a;
    const BigNat& b = k.brute_b ? *k.brute_b : *k.dp_b;
    const BigNat& s1 = k.brute_s1 ? *k.brute_s1 : *k.dp_s1;
    std::string info = "as-stated=" + a.to_string() + " order-negated=" + b.to_string() + " |S1|=|S2|=" + s1.to_string();
    if (!summary.resolved_variant && a_all && b_all) info += " (variants indistinguishable on this range)";
    CaseResult cr = make_case(m, 4, expected[i], actual.to_string(), notes, info);
    if (!cr.pass) cr.detail += " [" + info + "]";
    out.push_back(std::move(cr));
  }
  return out;
}

// Injections

CaseResult injections_level1_case(std::int64_t m, std::int64_t s, const HarnessOptions& opt) {
  const BigNat expected = super_catalan_direct(m, m + s);
  const PathFamilySpec p0(m, s, 0);
  const PathFamilySpec pm(m, s, -1);
  const PathFamilySpec pp(m, s, +1);
  try {
    check_budget(p0.cardinality() + pm.cardinality() + pp.cardinality(), opt.budget, "injections");
    Notes notes;
    const LineSet lines(m, s);
    std::set<std::vector<Step>> images[2];
    std::uint64_t domain[2] = {0, 0};
    std::optional<std::string> witness;
    for (int side = 0; side < 2; ++side) {
      const std::int64_t level = side == 0 ? -1 : +1;
      const DiagSegment& a = level == -1 ? lines.l1 : lines.l2;
      const DiagSegment& b = level == -1 ? lines.l4 : lines.l3;
      for_each_family_member(side == 0 ? pm : pp, [&](const LatticePath& p) {
        ++domain[side];
        const LatticePath img = inject_level1(p, m, s);
        if (!witness && (!is_path0_member(img, m, s) || !intersects(img, a) || !intersects(img, b))) {
          witness = "image of " + p.to_string() + " (" + img.to_string() + ") misses its pivot lines";
        }
        if (!witness && uninject_level1(img, m, s, level) != p) witness = "round trip fails at " + p.to_string();
        images[side].insert(img.steps());
      });
    }
    if (witness) notes.fail(*witness);
    notes.check(images[0].size() == domain[0], "level -1 injection is not injective");
    notes.check(images[1].size() == domain[1], "level +1 injection is not injective");

    std::uint64_t hit14 = 0, hit23 = 0, path0 = 0, overlap = 0;
    for_each_family_member(p0, [&](const LatticePath& p) {
      ++path0;
      const bool a = intersects(p, lines.l1) && intersects(p, lines.l4);
      const bool b = intersects(p, lines.l2) && intersects(p, lines.l3);
      hit14 += a;
      hit23 += b;
      overlap += (a && b);
    });
    notes.check(images[0].size() == hit14, "level -1 image size " + std::to_string(images[0].size()) +
                                               " != |l1&l4| " + std::to_string(hit14));
    notes.check(images[1].size() == hit23, "level +1 image size " + std::to_string(images[1].size()) +
                                               " != |l2&l3| " + std::to_string(hit23));
    notes.check(overlap == 0, "Path_0 members hit both line pairs");
    std::size_t shared = 0;
    for (const auto& st : images[0]) shared += images[1].count(st);
    notes.check(shared == 0, "level -1 and +1 images overlap");

    const std::uint64_t uncovered = path0 - images[0].size() - images[1].size() + shared;
    notes.check(BigNat(uncovered) == expected, "uncovered Path_0 members " + std::to_string(uncovered));
    return make_case(m, s, expected, std::to_string(uncovered), notes,
                     "|img-1|=" + std::to_string(images[0].size()) + " |img+1|=" + std::to_string(images[1].size()));
  } catch (const BudgetExceeded& e) {
    return budget_case(m, s, expected, e);
  }
}

CaseResult injections_level2_case(std::int64_t m, const HarnessOptions& opt) {
  const std::int64_t s = 4;
  const BigNat expected = super_catalan_direct(m, m + s);
  try {
    BigNat total;
    for (std::int64_t level = -2; level <= 2; ++level) total += PathFamilySpec(m, s, level).cardinality();
    check_budget(total, opt.budget, "injections");
    Notes notes;
    const LineSet lines(m, s);
    std::set<std::vector<Step>> images;
    std::uint64_t domain = 0;
    std::optional<std::string> witness;
    for (std::int64_t level : {-2, 2}) {
      for_each_family_member(PathFamilySpec(m, s, level), [&](const LatticePath& p) {
        ++domain;
        const Level2Image img = map_level2(p, m, s);
        const LatticePath& q = img.image;
        const LatticePath head = q.prefix(static_cast<std::size_t>(2 * m));
        const LatticePath tail = q.suffix(static_cast<std::size_t>(2 * m));
        const bool order_ok = level == -2 ? hits_in_order(head, lines.l1, lines.l2) : hits_in_order(head, lines.l2, lines.l1);
        const TailClass want = level == -2 ? TailClass::L3ThenL4 : TailClass::L4ThenL3;
        if (!witness && (!is_path0_member(q, m, s) || !intersects(q, lines.l1) || !intersects(q, lines.l2) ||
                         !intersects(q, lines.l3) || !intersects(q, lines.l4) || !order_ok || classify_tail(tail) != want)) {
          witness = "level " + std::to_string(level) + " image " + q.to_string() + " of " + p.to_string() +
                    " has the wrong line pattern";
        }
        if (!witness && unmap_level2(q, m, s, level) != p) witness = "round trip fails at " + p.to_string();
        images.insert(q.steps());
      });
    }
    if (witness) notes.fail(*witness);
    notes.check(images.size() == domain, "level +-2 maps are not injective");
    const BigNat target = count_all_four_l1_before_l2(m, opt.budget);
    notes.check(BigNat(domain) == target, "|level -2| + |level +2| = " + std::to_string(domain) +
                                              " but all-four l1-before-l2 count is " + target.to_string());

    // Inclusion-exclusion over measured family sizes.
    std::uint64_t sizes[5] = {0, 0, 0, 0, 0};
    for (std::int64_t level = -2; level <= 2; ++level) {
      for_each_family_member(PathFamilySpec(m, s, level), [&](const LatticePath&) { ++sizes[level + 2]; });
    }
    SignedBig net;
    for (std::int64_t level = -2; level <= 2; ++level) {
      net.add_signed(BigNat(sizes[level + 2]), level % 2 == 0 ? +1 : -1);
    }
    notes.check(net == SignedBig(expected), "signed family total " + net.to_string());
    return make_case(m, s, expected, net.to_string(), notes,
                     "|level+-2|=" + std::to_string(domain) + " all-four l1<l2=" + target.to_string());
  } catch (const BudgetExceeded& e) {
    return budget_case(m, s, expected, e);
  }
}

// Census cross-check

template <class Census>
std::optional<std::string> census_diff(const Census& dp, const Census& brute) {
  std::set<typename decltype(dp.counts)::key_type> keys;
  for (const auto& [f, n] : dp.counts) keys.insert(f);
  for (const auto& [f, n] : brute.counts) keys.insert(f);
  for (const auto& f : keys) {
    const auto a = dp.counts.find(f);
    const auto b = brute.counts.find(f);
    const BigNat x = a == dp.counts.end() ? BigNat(0) : a->second;
    const BigNat y = b == brute.counts.end() ? BigNat(0) : b->second;
    if (x != y) return to_string(f) + ": dp " + x.to_string() + " vs brute " + y.to_string();
  }
  return std::nullopt;
}

CaseResult census_case(std::int64_t m, std::int64_t s, const HeadCensus& head_dp, const HarnessOptions& opt) {
  const BigNat expected = binomial(2 * m, m) * binomial(2 * s, s);
  try {
    Notes notes;
    const TailCensus tail_dp = tail_census_dp(s);
    const HeadCensus head_brute = brute_head_census(m, opt.budget);
    const TailCensus tail_brute = brute_tail_census(s, m);
    if (auto d = census_diff(head_dp, head_brute)) notes.fail("head census " + *d);
    if (auto d = census_diff(tail_dp, tail_brute)) notes.fail("tail census " + *d);
    notes.check(head_dp.total == binomial(2 * m, m), "head total " + head_dp.total.to_string());
    notes.check(tail_dp.total == binomial(2 * s, s), "tail total " + tail_dp.total.to_string());
    const BigNat actual = head_dp.total * tail_dp.total;
    return make_case(m, s, expected, actual.to_string(), notes,
                     std::to_string(head_dp.counts.size()) + " head classes, " +
                         std::to_string(tail_dp.counts.size()) + " tail classes");
  } catch (const BudgetExceeded& e) {
    return budget_case(m, s, expected, e);
  }
}

// JSON

Json range_json(const IntRange& r) { return Json::array({r.lo, r.hi}); }

IntRange range_from_json(const Json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

}  // namespace

std::optional<std::string> find_witness(std::int64_t m, std::int64_t s, CountPredicate p,
                                        const std::function<bool(const LatticePath&)>& point_pred) {
  std::optional<std::string> witness;
  const auto split = static_cast<std::size_t>(2 * m);
  for_each_family_member(PathFamilySpec(m, s, 0), [&](const LatticePath& path) {
    if (witness) return;
    const bool by_points = point_pred(path);
    const bool by_features =
        feature_predicate(p, head_features_of(path.prefix(split)), tail_features_of(path.suffix(split)));
    if (by_points != by_features) {
      witness = path.to_string() + " (point-set " + (by_points ? "counts" : "rejects") + ", features " +
                (by_features ? "count" : "reject") + ")";
    }
  });
  return witness;
}

std::string to_string(CampaignKind k) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == k) return kn.name;
  }
  return "?";
}

CampaignKind parse_campaign_kind(std::string_view text) {
  for (const auto& kn : kKindNames) {
    if (text == kn.name) return kn.kind;
  }
  if (text == "census-cross-check") return CampaignKind::CensusCrossCheck;
  throw std::invalid_argument("unknown campaign kind: " + std::string(text));
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Brute: return "brute";
    case Engine::DP: return "dp";
    case Engine::Both: return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "brute") return Engine::Brute;
  if (text == "dp") return Engine::DP;
  if (text == "both") return Engine::Both;
  throw std::invalid_argument("unknown engine: " + std::string(text));
}

IntRange IntRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.hi < r.lo) throw std::invalid_argument("empty range: " + std::string(text));
  return r;
}

VerificationReport run_campaign(const Campaign& campaign, const HarnessOptions& options) {
  check_ranges(campaign);
  VerificationReport report;
  report.campaign = campaign;
  const IntRange mr = campaign.m_range;
  const IntRange sr = campaign.s_range;

  switch (campaign.kind) {
    case CampaignKind::Identities:
      for (std::int64_t m = mr.lo; m <= mr.hi; ++m)
        for (std::int64_t s = sr.lo; s <= sr.hi; ++s) report.cases.push_back(identities_case(m, s));
      break;
    case CampaignKind::Involution:
      for (std::int64_t m = mr.lo; m <= mr.hi; ++m)
        for (std::int64_t s = sr.lo; s <= sr.hi; ++s) report.cases.push_back(involution_case(m, s, options));
      break;
    case CampaignKind::Thm31: {
      for (std::int64_t s = sr.lo; s <= sr.hi; ++s) {
        std::vector<BigNat> series;
        if (uses_dp(campaign.engine)) series = fast_count_series(mr.hi, s, CountPredicate::Thm31);
        for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
          report.cases.push_back(thm31_case(m, s, campaign.engine, &series, options));
        }
      }
      break;
    }
    case CampaignKind::Thm41:
      report.cases = thm41_cases(campaign, options, report.summary);
      break;
    case CampaignKind::Injections:
      for (std::int64_t s = sr.lo; s <= sr.hi; ++s)
        for (std::int64_t m = mr.lo; m <= mr.hi; ++m)
          report.cases.push_back(s <= 3 ? injections_level1_case(m, s, options) : injections_level2_case(m, options));
      break;
    case CampaignKind::CensusCrossCheck: {
      const std::vector<HeadCensus> heads = head_census_series(mr.hi);
      for (std::int64_t m = mr.lo; m <= mr.hi; ++m)
        for (std::int64_t s = sr.lo; s <= sr.hi; ++s)
          report.cases.push_back(census_case(m, s, heads[static_cast<std::size_t>(m)], options));
      break;
    }
  }

  for (const CaseResult& c : report.cases) {
    if (c.pass) ++report.summary.passed;
    else ++report.summary.failed;
    if (c.detail.rfind("budget exceeded", 0) == 0) ++report.summary.budget_exceeded;
  }
  return report;
}

std::string serialize_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    auto quote = [](const std::string& v) {
      std::string out = "\"";
      for (char c : v) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    };
    std::ostringstream os;
    os << "m,s,expected,actual,pass,detail\n";
    for (const CaseResult& c : report.cases) {
      os << c.m << ',' << c.s << ',' << c.expected << ',' << c.actual << ',' << (c.pass ? "true" : "false") << ','
         << quote(c.detail) << '\n';
    }
    return os.str();
  }

  Json j;
  j["campaign"] = {{"kind", to_string(report.campaign.kind)},
                   {"m_range", range_json(report.campaign.m_range)},
                   {"s_range", range_json(report.campaign.s_range)},
                   {"engine", to_string(report.campaign.engine)}};
  j["cases"] = Json::array();
  for (const CaseResult& c : report.cases) {
    j["cases"].push_back({{"m", c.m},
                          {"s", c.s},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass},
                          {"detail", c.detail}});
  }
  Json summary = {{"passed", report.summary.passed}, {"failed", report.summary.failed}};
  summary["resolved_variant"] =
      report.summary.resolved_variant ? Json(to_string(*report.summary.resolved_variant)) : Json(nullptr);
  summary["budget_exceeded"] = report.summary.budget_exceeded;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(std::string_view text) {
  const Json j = Json::parse(text);
  VerificationReport r;
  const Json& c = j.at("campaign");
  r.campaign.kind = parse_campaign_kind(c.at("kind").get<std::string>());
  r.campaign.m_range = range_from_json(c.at("m_range"));
  r.campaign.s_range = range_from_json(c.at("s_range"));
  r.campaign.engine = parse_engine(c.at("engine").get<std::string>());
  for (const Json& e : j.at("cases")) {
    r.cases.push_back({e.at("m").get<std::int64_t>(), e.at("s").get<std::int64_t>(),
                       e.at("expected").get<std::string>(), e.at("actual").get<std::string>(),
                       e.at("pass").get<bool>(), e.at("detail").get<std::string>()});
  }
  const Json& s = j.at("summary");
  r.summary.passed = s.at("passed").get<std::int64_t>();
  r.summary.failed = s.at("failed").get<std::int64_t>();
  r.summary.budget_exceeded = s.value("budget_exceeded", std::int64_t{0});
  if (!s.at("resolved_variant").is_null()) {
    r.summary.resolved_variant = parse_variant(s.at("resolved_variant").get<std::string>());
  }
  return r;
}

}  // namespace supercat
