#pragma once

#include "supercat/bignum.hpp"

#include <cstdint>

namespace supercat {

/// C(n, k); zero when k < 0 or k > n. Computed multiplicatively.
BigNat binomial(std::int64_t n, std::int64_t k);

/// n-th Catalan number C(2n, n) / (n + 1).
BigNat catalan(std::int64_t n);

/// (2m)! (2n)! / (m! n! (m+n)!), evaluated from the factorial ratio with a
/// checked exact division.
BigNat super_catalan_direct(std::int64_t m, std::int64_t n);

/// Alternating sum over k of (-1)^k C(2n, n-k) C(2m, m+k).
BigNat super_catalan_vonszily(std::int64_t m, std::int64_t n);

/// Alternating sum over k of (-1)^k C(2m, m-k) C(2s, s+2k); equals S(m, m+s).
BigNat super_catalan_shifted(std::int64_t m, std::int64_t s);

/// Closed forms of S(m, m+s) for s in 0..3; std::out_of_range otherwise.
BigNat closed_form(std::int64_t m, std::int64_t s);

}  // namespace supercat
