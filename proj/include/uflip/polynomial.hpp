#pragma once

#include <map>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "uflip/rational.hpp"

namespace uflip {

/// Univariate Laurent polynomial with exact rational coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// two polynomials are equal iff their maps are equal.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  RatPoly(long constant) : RatPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  static RatPoly monomial(int exponent, const Rat& coefficient = Rat(1));
  /// The indeterminate u (or q, or v, depending on context).
  static RatPoly u() { return monomial(1); }
  /// 1 + u + ... + u^(n-1).
  static RatPoly geometric(int n);

  const std::map<int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int exponent) const;
  void add_term(int exponent, const Rat& coefficient);

  /// (max exponent, min exponent); throws std::domain_error on zero.
  std::pair<int, int> degree_and_valuation() const;
  int degree() const { return degree_and_valuation().first; }
  int valuation() const { return degree_and_valuation().second; }

  /// p(u) -> p(-u).
  RatPoly substitute_neg() const;
  /// p(u) -> p(u^k), k > 0.
  RatPoly substitute_power(int k) const;
  Rat evaluate(const Rat& x) const;
  RatPoly scaled(const Rat& factor) const;
  RatPoly shifted(int k) const;  ///< multiply by u^k

  /// Exact division of ordinary polynomials; returns (quotient, remainder).
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

  RatPoly operator-() const { return scaled(Rat(-1)); }
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Human-readable, highest degree first, e.g. "1/2*u^3 + 1/2*u".
  std::string to_string(const std::string& var = "u") const;

 private:
  std::map<int, Rat> terms_;
};

RatPoly pow(const RatPoly& p, int e);

/// [[exponent, "num/den"], ...] with exponents ascending.
nlohmann::json to_json(const RatPoly& p);
RatPoly poly_from_json(const nlohmann::json& j);

}  // namespace uflip
