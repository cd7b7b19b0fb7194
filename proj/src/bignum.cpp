#include "supercat/bignum.hpp"

#include "supercat/errors.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace supercat {

namespace {

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

BigNat::BigNat(std::uint64_t v) : value_(from_u64(v)) {}

BigNat BigNat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a nonnegative decimal: " + std::string(text));
  }
  return BigNat(mpz_class(std::string(text), 10));
}

std::size_t BigNat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BigNat::fits_u64() const { return bit_length() <= 64; }

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw ArithmeticError("BigNat subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(std::uint64_t rhs) {
  if (rhs <= std::numeric_limits<unsigned long>::max()) {
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(rhs));
  } else {
    value_ *= from_u64(rhs);
  }
  return *this;
}

BigNat BigNat::exact_div(const BigNat& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  if (sgn(r) != 0) {
    throw ArithmeticError("inexact division: " + to_string() + " / " + divisor.to_string());
  }
  return BigNat(std::move(q));
}

BigNat BigNat::exact_div(std::uint64_t divisor) const {
  if (divisor == 0) throw ArithmeticError("division by zero");
  if (divisor > std::numeric_limits<unsigned long>::max()) return exact_div(BigNat(divisor));
  mpz_class q;
  const unsigned long r = mpz_tdiv_q_ui(q.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(divisor));
  if (r != 0) {
    throw ArithmeticError("inexact division: " + to_string() + " / " + std::to_string(divisor));
  }
  return BigNat(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.to_string(); }

SignedBig::SignedBig(const BigNat& magnitude, int sign) : value_(magnitude.raw()) {
  if (sign < 0) value_ = -value_;
  else if (sign == 0) value_ = 0;
}

BigNat SignedBig::to_nat() const {
  if (sign() < 0) throw ArithmeticError("negative value where a count was expected: " + to_string());
  return BigNat(value_);
}

SignedBig& SignedBig::operator+=(const SignedBig& rhs) {
  value_ += rhs.value_;
  return *this;
}

SignedBig& SignedBig::operator-=(const SignedBig& rhs) {
  value_ -= rhs.value_;
  return *this;
}

SignedBig& SignedBig::add_signed(const BigNat& term, int sign) {
  if (sign > 0) value_ += term.raw();
  else if (sign < 0) value_ -= term.raw();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const SignedBig& v) { return os << v.to_string(); }

}  // namespace supercat
