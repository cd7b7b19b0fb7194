#include "supercat/census.hpp"
#include "supercat/errors.hpp"
#include "supercat/exact_arith.hpp"
#include "supercat/interpretations.hpp"
#include "supercat/render.hpp"
#include "supercat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace supercat;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

constexpr const char* kBudgetEnv = "SUPERCAT_ENUM_BUDGET";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t enumeration_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kBudgetEnv) + " must be a nonnegative integer");
  }
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

// compute

struct ComputeArgs {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string method = "direct";
};

int run_compute(const ComputeArgs& a) {
  if (a.m < 0 || a.n < 0) throw UsageError("m and n must be nonnegative");
  BigNat v;
  if (a.method == "direct") v = super_catalan_direct(a.m, a.n);
  else if (a.method == "vonszily") v = super_catalan_vonszily(a.m, a.n);
  else if (a.method == "shifted") {
    if (a.n < a.m) throw UsageError("shifted reads (m, n) as (m, m+s) and needs n >= m");
    v = super_catalan_shifted(a.m, a.n - a.m);
  } else {
    throw UsageError("unknown method: " + a.method);
  }
  std::cout << v << '\n';
  return kOk;
}

// table

struct TableArgs {
  std::int64_t max_m = 4;
  std::int64_t max_s = 4;
  std::string format = "csv";
};

int run_table(const TableArgs& a) {
  if (a.max_m < 0 || a.max_s < 0) throw UsageError("bounds must be nonnegative");
  if (a.format != "csv" && a.format != "json") throw UsageError("format must be csv or json");
  std::vector<std::vector<std::string>> rows;
  for (std::int64_t m = 0; m <= a.max_m; ++m) {
    std::vector<std::string> row;
    for (std::int64_t s = 0; s <= a.max_s; ++s) {
      const BigNat d = super_catalan_direct(m, m + s);
      const BigNat v = super_catalan_vonszily(m, m + s);
      const BigNat h = super_catalan_shifted(m, s);
      if (d != v || d != h) {
        std::cerr << "table: methods disagree at m=" << m << ", s=" << s << ": direct=" << d << " vonszily=" << v
                  << " shifted=" << h << '\n';
        return kVerifyFailed;
      }
      row.push_back(d.to_string());
    }
    rows.push_back(std::move(row));
  }
  std::ostringstream os;
  if (a.format == "csv") {
    os << "m";
    for (std::int64_t s = 0; s <= a.max_s; ++s) os << ",s=" << s;
    os << '\n';
    for (std::size_t m = 0; m < rows.size(); ++m) {
      os << m;
      for (const auto& v : rows[m]) os << ',' << v;
      os << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["max_m"] = a.max_m;
    j["max_s"] = a.max_s;
    j["rows"] = nlohmann::ordered_json::array();
    for (std::size_t m = 0; m < rows.size(); ++m) j["rows"].push_back({{"m", m}, {"values", rows[m]}});
    os << j.dump(2) << '\n';
  }
  std::cout << os.str();
  return kOk;
}

// verify

struct VerifyArgs {
  std::string kind;
  std::string m = "0..5";
  std::string s;
  std::string n;
  std::string engine = "both";
  std::string format = "json";
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  Campaign c;
  try {
    c.kind = parse_campaign_kind(a.kind);
    c.engine = parse_engine(a.engine);
    c.m_range = IntRange::parse(a.m);
    if (!a.n.empty()) {
      if (!a.s.empty()) throw UsageError("--s and --n are mutually exclusive");
      if (c.m_range.lo != c.m_range.hi) throw UsageError("--n needs a single --m value");
      const IntRange n = IntRange::parse(a.n);
      c.s_range = {n.lo - c.m_range.lo, n.hi - c.m_range.lo};
    } else if (!a.s.empty()) {
      c.s_range = IntRange::parse(a.s);
    } else {
      c.s_range = c.kind == CampaignKind::Thm41 || c.kind == CampaignKind::Injections ? IntRange{4, 4}
                  : c.kind == CampaignKind::Identities || c.kind == CampaignKind::Involution ? IntRange{0, 5}
                                                                                            : IntRange{0, 3};
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.format != "json" && a.format != "csv") throw UsageError("format must be json or csv");

  HarnessOptions opt;
  opt.budget = enumeration_budget();
  VerificationReport report;
  try {
    report = run_campaign(c, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = serialize_report(report, a.format == "json" ? ReportFormat::Json : ReportFormat::Csv);
  if (!write_output(text, a.out)) throw UsageError("cannot write " + a.out);
  std::cerr << "verify " << a.kind << ": " << report.summary.passed << " passed, " << report.summary.failed
            << " failed";
  if (report.summary.resolved_variant) std::cerr << ", resolved variant " << to_string(*report.summary.resolved_variant);
  std::cerr << '\n';
  if (report.summary.budget_exceeded > 0) return kBudget;
  return report.all_passed() ? kOk : kVerifyFailed;
}

// enumerate

struct EnumerateArgs {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::int64_t level = 0;
  std::string predicate;
  bool count_only = false;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.m < 0 || a.s < 0) throw UsageError("m and s must be nonnegative");
  if (a.level < -2 || a.level > 2) throw UsageError("level must lie in -2..2");
  if (!a.predicate.empty()) {
    if (a.level != 0) throw UsageError("predicates apply to level 0 (Path_0) only");
    try {
      check_predicate_range(parse_count_predicate(a.predicate), a.s);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  const PathFamilySpec spec(a.m, a.s, a.level);
  const BigNat size = spec.reachable() ? spec.cardinality() : BigNat(0);
  check_budget(size, enumeration_budget(), "enumerate");

  std::uint64_t count = 0;
  std::ostringstream os;
  for_each_family_member(spec, [&](const LatticePath& p) {
    if (!a.predicate.empty() && !path_predicate(a.predicate, p, a.m, a.s)) return;
    ++count;
    if (!a.count_only) os << p.to_string() << '\n';
  });
  if (a.count_only) std::cout << count << '\n';
  else std::cout << os.str();
  return kOk;
}

// census

struct CensusArgs {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::string engine = "dp";
  std::string format = "text";
};

int run_census(const CensusArgs& a) {
  if (a.m < 0 || a.s < 0 || a.s > 4) throw UsageError("census needs m >= 0 and 0 <= s <= 4");
  if (a.engine != "dp" && a.engine != "brute") throw UsageError("engine must be dp or brute");
  if (a.format != "text" && a.format != "json") throw UsageError("format must be text or json");
  const HeadCensus heads = a.engine == "dp" ? head_census_dp(a.m) : brute_head_census(a.m, enumeration_budget());
  const TailCensus tails = a.engine == "dp" ? tail_census_dp(a.s) : brute_tail_census(a.s, a.m);
  if (a.format == "text") {
    std::cout << "heads m=" << a.m << " total=" << heads.total << '\n';
    for (const auto& [f, n] : heads.counts) std::cout << "  " << to_string(f) << ": " << n << '\n';
    std::cout << "tails s=" << a.s << " total=" << tails.total << '\n';
    for (const auto& [f, n] : tails.counts) std::cout << "  " << to_string(f) << ": " << n << '\n';
    return kOk;
  }
  nlohmann::ordered_json j;
  j["m"] = a.m;
  j["s"] = a.s;
  j["heads"] = {{"total", heads.total.to_string()}, {"classes", nlohmann::ordered_json::object()}};
  for (const auto& [f, n] : heads.counts) j["heads"]["classes"][to_string(f)] = n.to_string();
  j["tails"] = {{"total", tails.total.to_string()}, {"classes", nlohmann::ordered_json::object()}};
  for (const auto& [f, n] : tails.counts) j["tails"]["classes"][to_string(f)] = n.to_string();
  std::cout << j.dump(2) << '\n';
  return kOk;
}

// render

struct RenderArgs {
  int figure = 0;
  std::int64_t m = 4;
  std::int64_t s = 3;
  std::string lines = "L1..L4";
  std::vector<std::string> paths;
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t cell = 40;
  bool no_grid = false;
  std::string out;
};

std::vector<SegmentId> parse_line_set(const std::string& text) {
  std::vector<SegmentId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_segment_id(item));
      continue;
    }
    const int lo = static_cast<int>(parse_segment_id(item.substr(0, dots)));
    const int hi = static_cast<int>(parse_segment_id(item.substr(dots + 2)));
    if (hi < lo) throw std::invalid_argument("empty line range: " + item);
    for (int i = lo; i <= hi; ++i) out.push_back(static_cast<SegmentId>(i));
  }
  return out;
}

// "STEPS" or "STEPS@x,y"
LatticePath parse_path_arg(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) return parse_path(text, {0, 0});
  const std::string where = text.substr(at + 1);
  const auto comma = where.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("path origin must be written x,y");
  const GridPoint origin{std::stoll(where.substr(0, comma)), std::stoll(where.substr(comma + 1))};
  return parse_path(text.substr(0, at), origin);
}

RenderSpec figure_preset(int figure) {
  RenderSpec spec;
  spec.m = 4;
  switch (figure) {
    case 1:
      spec.s = 3;
      spec.lines = parse_line_set("L1..L4");
      break;
    case 2: {
      spec.s = 3;
      spec.lines = parse_line_set("L1..L4");
      std::optional<LatticePath> first;
      for_each_family_member(PathFamilySpec(4, 3, -1), [&](const LatticePath& p) {
        if (!first) first = p;
      });
      spec.paths = {*first, inject_level1(*first, 4, 3)};
      break;
    }
    case 3:
      spec.s = 4;
      spec.lines = parse_line_set("L1..L7");
      break;
    case 4: {
      spec.s = 4;
      spec.lines = parse_line_set("L1..L4,L8");
      std::optional<LatticePath> first;
      for_each_family_member(PathFamilySpec(4, 4, -2), [&](const LatticePath& p) {
        if (!first) first = p;
      });
      spec.paths = {*first, map_level2(*first, 4, 4).image};
      break;
    }
    default:
      throw UsageError("figure must be 1, 2, 3 or 4");
  }
  return spec;
}

int run_render(const RenderArgs& a) {
  RenderSpec spec;
  try {
    if (a.figure != 0) {
      spec = figure_preset(a.figure);
    } else {
      spec.m = a.m;
      spec.s = a.s;
      spec.lines = parse_line_set(a.lines);
    }
    for (const auto& p : a.paths) spec.paths.push_back(parse_path_arg(p));
    spec.width = a.width;
    spec.height = a.height;
    spec.cell = a.cell;
    spec.grid = !a.no_grid;
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!write_output(render_svg(spec), a.out)) throw UsageError("cannot write " + a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super Catalan numbers S(m, m+s): exact values, lattice-path interpretations and their verification"};
  app.require_subcommand(1);
  app.footer(std::string("Environment:\n  ") + kBudgetEnv +
             "  cap on exhaustively enumerated paths (default 2^31); exceeding it exits with status 3.\n"
             "Exit status: 0 success, 1 verification failure, 2 usage error, 3 enumeration budget exceeded.");

  ComputeArgs compute;
  auto* c_compute = app.add_subcommand("compute", "Print S(m, n) by one of three formulas");
  c_compute->add_option("m", compute.m, "m")->required();
  c_compute->add_option("n", compute.n, "n")->required();
  c_compute->add_option("method", compute.method, "direct | vonszily | shifted (reads n as m+s)")
      ->check(CLI::IsMember({"direct", "vonszily", "shifted"}));

  TableArgs table;
  auto* c_table = app.add_subcommand("table", "Grid of S(m, m+s); all three formulas must agree");
  c_table->add_option("--max-m", table.max_m, "largest m");
  c_table->add_option("--max-s", table.max_s, "largest s");
  c_table->add_option("--format", table.format, "csv | json");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run a verification campaign and write its report");
  c_verify->add_option("kind", verify.kind, "identities | involution | thm31 | thm41 | injections | census")
      ->required();
  c_verify->add_option("--m", verify.m, "m range, a..b or a single value");
  c_verify->add_option("--s", verify.s, "s range (default depends on kind)");
  c_verify->add_option("--n", verify.n, "n range; sets s = n - m (needs a single m)");
  c_verify->add_option("--engine", verify.engine, "brute | dp | both");
  c_verify->add_option("--format", verify.format, "json | csv");
  c_verify->add_option("--out", verify.out, "report file (default stdout)");

  EnumerateArgs enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "List or count family members (0,0)->(m+i,m-i)->(m+s-i,m+s+i)");
  c_enum->add_option("--m", enumerate.m, "m")->required();
  c_enum->add_option("--s", enumerate.s, "s")->required();
  c_enum->add_option("--level", enumerate.level, "family level i in -2..2");
  c_enum->add_option("--predicate", enumerate.predicate, "thm31 | thm41-a | thm41-b | s1 | s2 (level 0 only)");
  c_enum->add_flag("--count-only", enumerate.count_only, "print only the count");

  CensusArgs census;
  auto* c_census = app.add_subcommand("census", "Feature census of heads (0,0)->(m,m) and tails of length 2s");
  c_census->add_option("--m", census.m, "m")->required();
  c_census->add_option("--s", census.s, "s in 0..4")->required();
  c_census->add_option("--engine", census.engine, "dp | brute");
  c_census->add_option("--format", census.format, "text | json");

  RenderArgs render;
  auto* c_render = app.add_subcommand("render", "Draw segments and paths as SVG");
  c_render->add_option("--figure", render.figure, "preset 1-4 (overrides --m/--s/--lines)");
  c_render->add_option("--m", render.m, "m");
  c_render->add_option("--s", render.s, "s");
  c_render->add_option("--lines", render.lines, "segments, e.g. L1..L4 or L1,L4,L8");
  c_render->add_option("--path", render.paths, "path overlay STEPS[@x,y]; repeatable");
  c_render->add_option("--width", render.width, "canvas width in grid units (0 = fit)");
  c_render->add_option("--height", render.height, "canvas height in grid units (0 = fit)");
  c_render->add_option("--cell", render.cell, "pixels per grid unit (even)");
  c_render->add_flag("--no-grid", render.no_grid, "omit the unit grid");
  c_render->add_option("--out", render.out, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*c_compute) return run_compute(compute);
    if (*c_table) return run_table(table);
    if (*c_verify) return run_verify(verify);
    if (*c_enum) return run_enumerate(enumerate);
    if (*c_census) return run_census(census);
    if (*c_render) return run_render(render);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const ArithmeticError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
