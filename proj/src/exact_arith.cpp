#include "supercat/exact_arith.hpp"

#include "supercat/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace supercat {

namespace {

void require_nonneg(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

// lo * (lo+1) * ... * hi, or 1 for an empty range.
BigNat rising_product(std::int64_t lo, std::int64_t hi) {
  BigNat out(1);
  for (std::int64_t i = lo; i <= hi; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace

BigNat binomial(std::int64_t n, std::int64_t k) {
  require_nonneg(n, "n");
  if (k < 0 || k > n) return BigNat(0);
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n-k+i, i), so every division is exact.
  BigNat acc(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= static_cast<std::uint64_t>(n - k + i);
    acc = acc.exact_div(static_cast<std::uint64_t>(i));
  }
  return acc;
}

BigNat catalan(std::int64_t n) {
  require_nonneg(n, "n");
  return binomial(2 * n, n).exact_div(static_cast<std::uint64_t>(n + 1));
}

BigNat super_catalan_direct(std::int64_t m, std::int64_t n) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  // (2m)!/m! * (2n)!/n! over (m+n)!
  BigNat numerator = rising_product(m + 1, 2 * m) * rising_product(n + 1, 2 * n);
  return numerator.exact_div(rising_product(1, m + n));
}

BigNat super_catalan_vonszily(std::int64_t m, std::int64_t n) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  const std::int64_t window = std::min(m, n);
  SignedBig sum;
  for (std::int64_t k = -window; k <= window; ++k) {
    sum.add_signed(binomial(2 * n, n - k) * binomial(2 * m, m + k), (k % 2 == 0) ? +1 : -1);
  }
  return sum.to_nat();
}

BigNat super_catalan_shifted(std::int64_t m, std::int64_t s) {
  require_nonneg(m, "m");
  require_nonneg(s, "s");
  const std::int64_t window = std::min(m, s);
  SignedBig sum;
  for (std::int64_t k = -window; k <= window; ++k) {
    sum.add_signed(binomial(2 * m, m - k) * binomial(2 * s, s + 2 * k), (k % 2 == 0) ? +1 : -1);
  }
  return sum.to_nat();
}

BigNat closed_form(std::int64_t m, std::int64_t s) {
  require_nonneg(m, "m");
  const auto um = static_cast<std::uint64_t>(m);
  switch (s) {
    case 0:
      return binomial(2 * m, m);
    case 1:
      return binomial(2 * m, m) * 2;
    case 2:
      return catalan(m) * (2 * (2 * um + 3));
    case 3:
      return catalan(m) * (4 * (2 * um + 5));
    default:
      throw std::out_of_range("closed_form defined only for s in 0..3, got " + std::to_string(s));
  }
}

}  // namespace supercat
