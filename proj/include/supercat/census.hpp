#pragma once

#include "supercat/bignum.hpp"
#include "supercat/involution.hpp"
#include "supercat/lattice.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace supercat {

/// Features of a head (0,0) -> (m,m).
struct HeadFeatures {
  bool hit_l1 = false;
  bool hit_l2 = false;
  bool l1_before_l2 = false;
  bool l2_before_l1 = false;

  friend auto operator<=>(const HeadFeatures&, const HeadFeatures&) = default;
};

/// Features of a tail (m,m) -> (m+s,m+s).
struct TailFeatures {
  bool hit_l3 = false;
  bool hit_l4 = false;
  bool l3_then_l4 = false;
  bool l4_then_l3 = false;
  bool in_band_56 = false;  // 0 <= y - x <= 1 throughout
  bool in_band_67 = false;  // -1 <= y - x <= 0 throughout

  friend auto operator<=>(const TailFeatures&, const TailFeatures&) = default;
};

std::string to_string(const HeadFeatures& f);
std::string to_string(const TailFeatures& f);

template <class Features>
struct FeatureCensus {
  std::map<Features, BigNat> counts;
  BigNat total;

  void add(const Features& f, const BigNat& n) {
    counts[f] += n;
    total += n;
  }

  template <class Pred>
  [[nodiscard]] BigNat count_where(Pred&& pred) const {
    BigNat out;
    for (const auto& [f, n] : counts) {
      if (pred(f)) out += n;
    }
    return out;
  }

  friend bool operator==(const FeatureCensus&, const FeatureCensus&) = default;
};

using HeadCensus = FeatureCensus<HeadFeatures>;
using TailCensus = FeatureCensus<TailFeatures>;

/// Head census for m via a layered walk over (diagonal offset, flags).
HeadCensus head_census_dp(std::int64_t m);

/// Head censuses for every m in 0..max_m from a single walk: the census for
/// m is read off at layer 2m, offset 0.
std::vector<HeadCensus> head_census_series(std::int64_t max_m);

/// Tail census for s in 0..4 (std::out_of_range otherwise).
TailCensus tail_census_dp(std::int64_t s);

/// Exhaustive censuses using the segment point sets of lattice-core.
HeadCensus brute_head_census(std::int64_t m, std::uint64_t budget = kDefaultEnumerationBudget);
TailCensus brute_tail_census(std::int64_t s, std::int64_t m = 0);

/// Features of one path computed from its offset sequence.
HeadFeatures head_features_of(const LatticePath& head);
TailFeatures tail_features_of(const LatticePath& tail);

enum class CountPredicate { Thm31, Thm41AsStated, Thm41OrderNegated, S1, S2 };

std::string to_string(CountPredicate p);
CountPredicate parse_count_predicate(std::string_view text);

/// Throws std::out_of_range when s is outside the predicate's range
/// (thm31: 0..3; the rest: exactly 4).
void check_predicate_range(CountPredicate p, std::int64_t s);

bool feature_predicate(CountPredicate p, const HeadFeatures& head, const TailFeatures& tail);

/// Number of Path_0 members satisfying p, from the head and tail censuses.
BigNat fast_count(std::int64_t m, std::int64_t s, CountPredicate p);
BigNat combine_censuses(const HeadCensus& heads, const TailCensus& tails, CountPredicate p);

/// fast_count for every m in 0..max_m.
std::vector<BigNat> fast_count_series(std::int64_t max_m, std::int64_t s, CountPredicate p);

}  // namespace supercat
