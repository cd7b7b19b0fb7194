#pragma once

#include "supercat/bignum.hpp"
#include "supercat/involution.hpp"
#include "supercat/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace supercat {

/// The two readings of the order condition in the s = 4 interpretation.
///   AsStated:     exclude band tails when the head hits l1 before l2.
///   OrderNegated: exclude band tails when the head hits l1 and l2 but
///                 never l1 before l2.
enum class Variant { AsStated, OrderNegated };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

struct InterpretationParams {
  std::int64_t m = 0;
  std::int64_t s = 0;
  Variant variant = Variant::OrderNegated;

  void validate() const;
};

/// All nine segments for one (m, s).
struct LineSet {
  explicit LineSet(std::int64_t m, std::int64_t s);
  DiagSegment l1, l2, l3, l4, l5, l6, l7, l8, l9;
};

/// Path_0: origin (0,0), length 2(m+s), through (m,m), ends at (m+s,m+s).
bool is_path0_member(const LatticePath& path, std::int64_t m, std::int64_t s);

/// Family level of a path (0,0) -> (m+i, m-i) -> (m+s-i, m+s+i), if any.
std::optional<std::int64_t> family_level(const LatticePath& path, std::int64_t m, std::int64_t s);

// s <= 3

/// Not (hits l1 and l4) and not (hits l2 and l3).
bool theorem31_predicate(const LatticePath& path, std::int64_t m, std::int64_t s);
BigNat count_theorem31(std::int64_t m, std::int64_t s, std::uint64_t budget = kDefaultEnumerationBudget);

/// Reflection injection of family levels -1 and +1 into Path_0.
LatticePath inject_level1(const LatticePath& path, std::int64_t m, std::int64_t s);
/// Inverse of inject_level1 for an image of the given level.
LatticePath uninject_level1(const LatticePath& image, std::int64_t m, std::int64_t s, std::int64_t level);

// Tails (m,m) -> (m+s,m+s)

enum class TailClass { AvoidsBoth, L3Only, L4Only, L3ThenL4, L4ThenL3 };

std::string to_string(TailClass c);

TailClass classify_tail(const LatticePath& tail);

/// The unique s = 4 tail of class L3ThenL4 ("UURRRRUU") or L4ThenL3
/// ("RRUUUURR") starting at (m,m).
LatticePath canonical_tail(TailClass c, std::int64_t m, std::int64_t s);

// s = 4

struct Level2Image {
  LatticePath image;
  std::int64_t level = 0;
  std::size_t outer_pivot = 0;  // last l8 (l9) visit of the original head
  std::size_t inner_pivot = 0;  // last l1 (l2) visit before outer_pivot
};

/// Double reflection of a family level -2 / +2 member into Path_0.
Level2Image map_level2(const LatticePath& path, std::int64_t m, std::int64_t s);
/// Recovers the family member from a map_level2 image.
LatticePath unmap_level2(const LatticePath& image, std::int64_t m, std::int64_t s, std::int64_t level);

bool theorem41_predicate(const LatticePath& path, std::int64_t m, Variant variant);
BigNat count_theorem41(std::int64_t m, Variant variant, std::uint64_t budget = kDefaultEnumerationBudget);

/// Hits l1, l2, l3 and l4, and never l1 before l2.
bool in_s1(const LatticePath& path, std::int64_t m);
/// Hits l1 and l2, never l1 before l2, tail inside band (l5,l6) or (l6,l7).
bool in_s2(const LatticePath& path, std::int64_t m);
BigNat count_s1(std::int64_t m, std::uint64_t budget = kDefaultEnumerationBudget);
BigNat count_s2(std::int64_t m, std::uint64_t budget = kDefaultEnumerationBudget);

/// Hits all of l1..l4 with an l1 visit before an l2 visit.
BigNat count_all_four_l1_before_l2(std::int64_t m, std::uint64_t budget = kDefaultEnumerationBudget);

/// Tail-level pairing of S1 with S2: L4ThenL3 tails go to band (l5,l6),
/// L3ThenL4 tails to band (l6,l7); the head is kept.
LatticePath pair_s1_to_s2(const LatticePath& path, std::int64_t m);

struct VariantResolution {
  bool as_stated_matches = true;
  bool order_negated_matches = true;
  std::optional<Variant> resolved;  // set iff exactly one variant matches
};

/// Brute-force comparison of both variants against S(m, m+4) over m_lo..m_hi.
VariantResolution resolve_variant(std::int64_t m_lo, std::int64_t m_hi,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Dispatch used by the CLI: predicate name -> membership test on Path_0.
/// Names: thm31, thm41-a (AsStated), thm41-b (OrderNegated), s1, s2.
bool path_predicate(std::string_view name, const LatticePath& path, std::int64_t m, std::int64_t s);

}  // namespace supercat
