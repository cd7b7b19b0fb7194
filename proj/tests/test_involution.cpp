#include "oracles.hpp"

#include "supercat/errors.hpp"
#include "supercat/exact_arith.hpp"
#include "supercat/involution.hpp"

#include <doctest.h>

using namespace supercat;

namespace {

// Step-by-step trace of the swap rule on the text form.
std::string phi_trace(std::string w, int m) {
  for (int i = 0; i < 2 * m; ++i) {
    if (w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(2 * m + i)]) {
      std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(2 * m + i)]);
      break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(parse_path("RRUURU"), 1).to_string() == "URRURU");
  CHECK(phi_trace("RRUURU", 1) == "URRURU");
  CHECK(phi(parse_path("RURURU"), 1).to_string() == "RURURU");
  CHECK_THROWS_AS(phi(parse_path("RUR"), 1), std::invalid_argument);
}

TEST_CASE("phi agrees with the text trace on every 10-step word") {
  for (int m = 0; m <= 2; ++m) {
    for (const std::string& w : oracle::words(5, 5)) CHECK(phi(parse_path(w), m).to_string() == phi_trace(w, m));
  }
}

TEST_CASE("is_fixed") {
  CHECK(is_fixed(parse_path("RURU"), 1));
  CHECK_FALSE(is_fixed(parse_path("RRUU"), 1));
  CHECK(is_fixed(parse_path("RRUU"), 0));
  CHECK(is_fixed(LatticePath({0, 0}), 0));
}

TEST_CASE("signed_path_sum examples") {
  CHECK(signed_path_sum(1, 1) == SignedBig(BigNat(2)));
  CHECK(signed_path_sum(0, 2) == SignedBig(BigNat(6)));
  CHECK(signed_path_sum(1, 2) == SignedBig(BigNat(4)));
  CHECK_THROWS_AS(signed_path_sum(3, 2), std::invalid_argument);
}

TEST_CASE("fixed_point_census examples") {
  CHECK(fixed_point_census(1, 1) == std::map<std::int64_t, BigNat>{{0, BigNat(2)}});
  CHECK(fixed_point_census(1, 2) == std::map<std::int64_t, BigNat>{{0, BigNat(4)}});
  for (std::int64_t n = 0; n <= 6; ++n) {
    CHECK(fixed_point_census(0, n) == std::map<std::int64_t, BigNat>{{0, binomial(2 * n, n)}});
  }
}

TEST_CASE("budget is enforced, never truncated") {
  CHECK_THROWS_AS(signed_path_sum(1, 9, 1000), BudgetExceeded);
  CHECK_THROWS_AS(fixed_point_census(2, 4, 10), BudgetExceeded);
  CHECK_NOTHROW(signed_path_sum(1, 2, 20));  // C(6,3) = 20 paths exactly
}

TEST_CASE("involution properties, exhaustive for m + n <= 9") {
  for (std::int64_t m = 0; 2 * m <= 9; ++m) {
    for (std::int64_t n = m; m + n <= 9; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      std::uint64_t fixed = 0;
      for_each_path({0, 0}, {m + n, m + n}, [&](const LatticePath& p) {
        const LatticePath q = phi(p, m);
        REQUIRE(phi(q, m) == p);
        REQUIRE((q == p) == is_fixed(p, m));
        if (q != p) {
          const std::int64_t d = antidiagonal_k(q, m) - antidiagonal_k(p, m);
          REQUIRE((d == 1 || d == -1));
        } else {
          ++fixed;
        }
        REQUIRE(std::abs(antidiagonal_k(p, m)) <= m);
      });
      const auto census = fixed_point_census(m, n);
      BigNat total;
      SignedBig signed_total;
      for (std::int64_t k = -m; k <= m; ++k) {
        const auto it = census.find(k);
        const BigNat got = it == census.end() ? BigNat(0) : it->second;
        CHECK(got == fixed_point_formula(m, n, k));
        total += got;
        signed_total.add_signed(got, k % 2 == 0 ? 1 : -1);
      }
      CHECK(total == BigNat(fixed));
      const BigNat s = super_catalan_direct(m, n);
      CHECK(signed_total == SignedBig(s));
      CHECK(signed_path_sum(m, n) == SignedBig(s));
    }
  }
}
