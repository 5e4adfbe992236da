#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace uflip {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  /// Parses "n", "-n" or "n/d".
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  /// Throws if the value is not an integer fitting in 64 bits.
  std::int64_t to_int64() const;

  /// Always of the form "num/den".
  std::string to_string() const;
  /// "num" for integers, "num/den" otherwise.
  std::string to_short_string() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_short_string();
  }

 private:
  mpq_class value_{0};
};

/// 2^e for any integer e.
Rat pow2(int e);

/// (-1)^e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace uflip
