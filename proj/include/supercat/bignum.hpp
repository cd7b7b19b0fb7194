#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace supercat {

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction is checked: a result below zero throws ArithmeticError, so a
/// BigNat can never hold a negative value.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  static BigNat from_decimal(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] std::size_t bit_length() const;

  /// Fits in uint64 without loss.
  [[nodiscard]] bool fits_u64() const;
  [[nodiscard]] std::uint64_t to_u64() const;

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator-=(const BigNat& rhs);
  BigNat& operator*=(const BigNat& rhs);
  BigNat& operator*=(std::uint64_t rhs);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator*(BigNat a, std::uint64_t b) { return a *= b; }

  /// Quotient of an exact division; throws ArithmeticError on a nonzero
  /// remainder or a zero divisor.
  [[nodiscard]] BigNat exact_div(const BigNat& divisor) const;
  [[nodiscard]] BigNat exact_div(std::uint64_t divisor) const;

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] const mpz_class& raw() const { return value_; }

 private:
  explicit BigNat(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_;

  friend class SignedBig;
};

std::ostream& operator<<(std::ostream& os, const BigNat& v);

/// Signed arbitrary-precision integer: intermediate value of alternating sums.
class SignedBig {
 public:
  SignedBig() = default;
  SignedBig(const BigNat& magnitude, int sign = +1);  // NOLINT(google-explicit-constructor)

  /// -1, 0 or +1; 0 iff the magnitude is 0.
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] BigNat magnitude() const { return BigNat(mpz_class(abs(value_))); }
  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  /// The value as a count; throws ArithmeticError when negative.
  [[nodiscard]] BigNat to_nat() const;

  SignedBig& operator+=(const SignedBig& rhs);
  SignedBig& operator-=(const SignedBig& rhs);
  SignedBig& add_signed(const BigNat& term, int sign);

  friend bool operator==(const SignedBig& a, const SignedBig& b) { return cmp(a.value_, b.value_) == 0; }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const SignedBig& v);

}  // namespace supercat
