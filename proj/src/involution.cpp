#include "supercat/involution.hpp"

#include "supercat/errors.hpp"
#include "supercat/exact_arith.hpp"

#include <stdexcept>
#include <string>

namespace supercat {

namespace {

void check_phi_domain(const LatticePath& path, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (path.size() < static_cast<std::size_t>(4 * m)) {
    throw std::invalid_argument("phi needs at least 4m steps, path has " + std::to_string(path.size()));
  }
}

void check_pair(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if (m > n) throw std::invalid_argument("involution requires m <= n");
}

}  // namespace

void check_budget(const BigNat& count, std::uint64_t budget, const std::string& what) {
  if (count > BigNat(budget)) {
    throw BudgetExceeded(what + ": " + count.to_string() + " paths exceed the enumeration budget of " +
                         std::to_string(budget));
  }
}

LatticePath phi(const LatticePath& path, std::int64_t m) {
  check_phi_domain(path, m);
  const auto half = static_cast<std::size_t>(2 * m);
  for (std::size_t i = 0; i < half; ++i) {
    if (path.step(i) != path.step(half + i)) {
      std::vector<Step> steps = path.steps();
      std::swap(steps[i], steps[half + i]);
      return LatticePath(path.origin(), std::move(steps));
    }
  }
  return path;
}

bool is_fixed(const LatticePath& path, std::int64_t m) {
  check_phi_domain(path, m);
  const auto half = static_cast<std::size_t>(2 * m);
  for (std::size_t i = 0; i < half; ++i) {
    if (path.step(i) != path.step(half + i)) return false;
  }
  return true;
}

SignedBig signed_path_sum(std::int64_t m, std::int64_t n, std::uint64_t budget) {
  check_pair(m, n);
  const GridPoint end{m + n, m + n};
  check_budget(path_count({0, 0}, end), budget, "signed_path_sum");
  std::int64_t sum = 0;  // |sum| <= budget < 2^63
  for_each_path({0, 0}, end, [&](const LatticePath& p) { sum += (antidiagonal_k(p, m) % 2 == 0) ? 1 : -1; });
  return sum >= 0 ? SignedBig(BigNat(static_cast<std::uint64_t>(sum)), +1)
                  : SignedBig(BigNat(static_cast<std::uint64_t>(-sum)), -1);
}

std::map<std::int64_t, BigNat> fixed_point_census(std::int64_t m, std::int64_t n, std::uint64_t budget) {
  check_pair(m, n);
  const GridPoint end{m + n, m + n};
  check_budget(path_count({0, 0}, end), budget, "fixed_point_census");
  std::map<std::int64_t, std::uint64_t> tally;
  for_each_path({0, 0}, end, [&](const LatticePath& p) {
    if (is_fixed(p, m)) ++tally[antidiagonal_k(p, m)];
  });
  std::map<std::int64_t, BigNat> out;
  for (const auto& [k, c] : tally) out.emplace(k, BigNat(c));
  return out;
}

BigNat fixed_point_formula(std::int64_t m, std::int64_t n, std::int64_t k) {
  check_pair(m, n);
  return binomial(2 * m, m - k) * binomial(2 * n - 2 * m, n - m + 2 * k);
}

}  // namespace supercat
