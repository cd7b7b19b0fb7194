#pragma once

#include "supercat/census.hpp"
#include "supercat/interpretations.hpp"
#include "supercat/involution.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supercat {

enum class CampaignKind { Identities, Involution, Thm31, Thm41, Injections, CensusCrossCheck };
enum class Engine { Brute, DP, Both };

std::string to_string(CampaignKind k);
std::string to_string(Engine e);
CampaignKind parse_campaign_kind(std::string_view text);
Engine parse_engine(std::string_view text);

/// Inclusive integer range; the text form is "a..b" or a single value.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static IntRange parse(std::string_view text);
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct Campaign {
  CampaignKind kind = CampaignKind::Identities;
  IntRange m_range;
  IntRange s_range;
  Engine engine = Engine::Both;

  friend bool operator==(const Campaign&, const Campaign&) = default;
};

struct CaseResult {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string detail;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct ReportSummary {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t budget_exceeded = 0;
  std::optional<Variant> resolved_variant;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  Campaign campaign;
  std::vector<CaseResult> cases;
  ReportSummary summary;

  [[nodiscard]] bool all_passed() const { return summary.failed == 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct HarnessOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Runs every case of the campaign. Expected values always come from
/// super_catalan_direct. std::invalid_argument for ranges the kind does
/// not support.
VerificationReport run_campaign(const Campaign& campaign, const HarnessOptions& options = {});

/// First Path_0 member, in lexicographic order, on which point_pred and the
/// census feature predicate p disagree (rendered with both verdicts).
std::optional<std::string> find_witness(std::int64_t m, std::int64_t s, CountPredicate p,
                                        const std::function<bool(const LatticePath&)>& point_pred);

enum class ReportFormat { Json, Csv };

std::string serialize_report(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report_json(std::string_view text);

}  // namespace supercat
