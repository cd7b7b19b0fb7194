#pragma once

#include "supercat/bignum.hpp"
#include "supercat/lattice.hpp"

#include <cstdint>
#include <map>

namespace supercat {

/// Default cap on the number of paths an exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 31;

/// Throws BudgetExceeded when `count` paths exceed `budget`.
void check_budget(const BigNat& count, std::uint64_t budget, const std::string& what);

/// Swaps the first pair of steps (i, 2m + i), 1 <= i <= 2m, that differ.
/// Returns the path unchanged when no such pair exists.
LatticePath phi(const LatticePath& path, std::int64_t m);

/// True iff step i equals step 2m + i for every 1 <= i <= 2m.
bool is_fixed(const LatticePath& path, std::int64_t m);

/// Sum of (-1)^k over all paths (0,0) -> (m+n, m+n), k = antidiagonal_k.
SignedBig signed_path_sum(std::int64_t m, std::int64_t n, std::uint64_t budget = kDefaultEnumerationBudget);

/// Fixed points of phi grouped by antidiagonal_k.
std::map<std::int64_t, BigNat> fixed_point_census(std::int64_t m, std::int64_t n,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// C(2m, m-k) * C(2n-2m, n-m+2k), the closed count of fixed paths at k.
BigNat fixed_point_formula(std::int64_t m, std::int64_t n, std::int64_t k);

}  // namespace supercat
