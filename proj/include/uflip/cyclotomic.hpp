#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uflip {

/// Element of the ring of cyclotomic integers Z[zeta_N].
///
/// Kept in canonical form: coefficients on the power basis 1, z, ..., z^(phi(N)-1)
/// after reduction modulo the N-th cyclotomic polynomial, so equality is
/// coefficient-wise. Values of characters of finite groups live here.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);
  static Cyclotomic integer(int order, std::int64_t value);
  /// zeta_order^k.
  static Cyclotomic root_of_unity(int order, int k);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  /// Same number viewed in Z[zeta_m]; m must be a multiple of order().
  Cyclotomic lifted(int m) const;
  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conjugate() const;

  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator*(std::int64_t k) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on canonical coefficient vectors, used for deterministic sorting.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(int order, std::vector<std::int64_t> raw);  // reduces raw mod Phi_order
  int order_;
  std::vector<std::int64_t> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

}  // namespace uflip
