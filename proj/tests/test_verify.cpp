#include "supercat/exact_arith.hpp"
#include "supercat/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace supercat;

namespace {

Campaign make(CampaignKind k, IntRange m, IntRange s, Engine e = Engine::Both) {
  Campaign c;
  c.kind = k;
  c.m_range = m;
  c.s_range = s;
  c.engine = e;
  return c;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char ch : text) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("IntRange parsing") {
  CHECK(IntRange::parse("0..6") == IntRange{0, 6});
  CHECK(IntRange::parse("4") == IntRange{4, 4});
  CHECK_THROWS_AS(IntRange::parse("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(IntRange::parse("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(IntRange::parse("1..2..3"), std::invalid_argument);
}

TEST_CASE("identities campaign") {
  const auto r = run_campaign(make(CampaignKind::Identities, {0, 10}, {0, 10}));
  CHECK(r.all_passed());
  CHECK(r.summary.failed == 0);
  CHECK(r.summary.passed == static_cast<std::int64_t>(r.cases.size()));
  CHECK_FALSE(r.summary.resolved_variant.has_value());
}

TEST_CASE("thm31 campaign with both engines") {
  const auto r = run_campaign(make(CampaignKind::Thm31, {0, 6}, {0, 3}));
  CHECK(r.cases.size() == 28);
  CHECK(r.all_passed());
  for (const auto& c : r.cases) CHECK(c.actual == super_catalan_direct(c.m, c.m + c.s).to_string());
  CHECK_THROWS_AS(run_campaign(make(CampaignKind::Thm31, {0, 2}, {0, 4})), std::invalid_argument);
}

TEST_CASE("involution campaign") {
  const auto r = run_campaign(make(CampaignKind::Involution, {0, 2}, {0, 4}));
  CHECK(r.all_passed());
  CHECK(r.summary.budget_exceeded == 0);
}

TEST_CASE("thm41 campaign records the resolved variant") {
  const auto r = run_campaign(make(CampaignKind::Thm41, {0, 5}, {4, 4}));
  CHECK(r.all_passed());
  REQUIRE(r.summary.resolved_variant.has_value());
  CHECK(*r.summary.resolved_variant == Variant::OrderNegated);
  CHECK_THROWS_AS(run_campaign(make(CampaignKind::Thm41, {0, 5}, {3, 4})), std::invalid_argument);
}

TEST_CASE("injection and census campaigns") {
  CHECK(run_campaign(make(CampaignKind::Injections, {0, 4}, {0, 4})).all_passed());
  CHECK(run_campaign(make(CampaignKind::CensusCrossCheck, {0, 6}, {0, 4})).all_passed());
}

TEST_CASE("budget violations are reported per case") {
  HarnessOptions opt;
  opt.budget = 1000;
  const auto r = run_campaign(make(CampaignKind::Involution, {1, 1}, {8, 8}), opt);
  REQUIRE(r.cases.size() == 1);
  CHECK_FALSE(r.cases[0].pass);
  CHECK(r.summary.budget_exceeded == 1);
  CHECK(r.summary.failed == 1);
  CHECK(r.cases[0].detail.rfind("budget exceeded", 0) == 0);
}

TEST_CASE("empty report serializes") {
  VerificationReport r;
  const auto j = nlohmann::json::parse(serialize_report(r, ReportFormat::Json));
  CHECK(j["cases"].is_array());
  CHECK(j["cases"].empty());
  CHECK(j["summary"]["passed"] == 0);
  CHECK(j["summary"]["resolved_variant"].is_null());
  CHECK(serialize_report(r, ReportFormat::Csv) == "m,s,expected,actual,pass,detail\n");
}

TEST_CASE("json round trip and schema") {
  const auto r = run_campaign(make(CampaignKind::Thm41, {0, 3}, {4, 4}));
  const std::string text = serialize_report(r, ReportFormat::Json);
  CHECK(parse_report_json(text) == r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["summary"]["resolved_variant"] == "order-negated");
  CHECK(j["cases"][0]["expected"].is_string());
  CHECK(j["cases"][0]["m"].is_number_integer());
  CHECK(j["campaign"]["kind"] == "thm41");

  const auto r2 = run_campaign(make(CampaignKind::Identities, {38, 40}, {0, 2}));
  CHECK(parse_report_json(serialize_report(r2, ReportFormat::Json)) == r2);
}

TEST_CASE("csv has a header and one row per case") {
  const auto r = run_campaign(make(CampaignKind::Thm31, {0, 3}, {0, 3}));
  const std::string csv = serialize_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("m,s,expected,actual,pass,detail\n", 0) == 0);
  CHECK(count_lines(csv) == r.cases.size() + 1);
}

TEST_CASE("reports are deterministic") {
  const auto c = make(CampaignKind::Injections, {0, 3}, {0, 4});
  CHECK(serialize_report(run_campaign(c), ReportFormat::Json) == serialize_report(run_campaign(c), ReportFormat::Json));
  CHECK(serialize_report(run_campaign(c), ReportFormat::Csv) == serialize_report(run_campaign(c), ReportFormat::Csv));
}

TEST_CASE("find_witness reports the first disagreement") {
  // Drop the l2/l3 condition: the first member hitting both l2 and l3 disagrees.
  const LineSet lines(2, 2);
  const auto w = find_witness(2, 2, CountPredicate::Thm31, [&](const LatticePath& p) {
    return !(intersects(p, lines.l1) && intersects(p, lines.l4));
  });
  REQUIRE(w.has_value());
  std::string first;
  for_each_family_member(PathFamilySpec(2, 2, 0), [&](const LatticePath& p) {
    if (first.empty() && intersects(p, lines.l2) && intersects(p, lines.l3)) first = p.to_string();
  });
  CHECK(w->find(first) != std::string::npos);

  const auto none = find_witness(2, 2, CountPredicate::Thm31,
                                 [&](const LatticePath& p) { return theorem31_predicate(p, 2, 2); });
  CHECK_FALSE(none.has_value());
}
