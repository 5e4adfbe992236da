#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "uflip/polynomial.hpp"
#include "uflip/symbols.hpp"

namespace uflip {

/// Element of W(B_n) acting on {+-1, ..., +-n}; images()[i] = w(i+1).
class SignedPerm {
 public:
  SignedPerm() = default;
  /// Throws std::invalid_argument unless |images| is a permutation of 1..n.
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int n);
  /// The longest element, -1.
  static SignedPerm longest(int n);
  /// Bourbaki generators: s_i = (i, i+1) for i < n, s_n = sign change of n (type B),
  /// s_n = (n-1, n) composed with both sign changes (type D).
  static SignedPerm simple_reflection(int n, int i, bool type_d);

  int rank() const { return static_cast<int>(img_.size()); }
  const std::vector<int>& images() const { return img_; }
  int operator()(int i) const;  // i in +-{1..n}

  bool in_d() const;
  int length_b() const;
  int length_d() const;

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);  // a after b
  SignedPerm inverse() const;
  SignedPerm power(int k) const;

  std::string to_string() const;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> img_;
};

/// A conjugacy class of W(B_n) or W(D_n): positive and negative cycle lengths
/// as partitions; split is +1/-1 for the two D_n classes with only positive
/// cycles of even length, 0 otherwise.
struct SignedCycleType {
  Partition pos;
  Partition neg;
  int split = 0;

  int rank() const;
  /// "lambda.mu", e.g. "21.1"; split classes get a trailing "+" or "-".
  std::string to_string() const;
  friend auto operator<=>(const SignedCycleType&, const SignedCycleType&) = default;
};

/// True when the B_n class splits into two W(D_n) classes.
bool is_split_type(const Partition& pos, const Partition& neg);

/// Signed cycle type of w; for w in W(D_n) of split type the split tag is set
/// when in_d is true.
SignedCycleType cycle_type(const SignedPerm& w, bool in_d);
/// A fixed representative: cycles on consecutive points, all signs +, one
/// minus sign at the end of each negative cycle; the "-" split class uses the
/// conjugate by the sign change of n.
SignedPerm representative(const SignedCycleType& c);

/// |W(B_n)| / |class| for the B_n class.
std::int64_t centralizer_order_b(const Partition& pos, const Partition& neg);
std::int64_t order_b(int n);
std::int64_t order_d(int n);

/// det(1 - q w) on the reflection representation.
RatPoly det_one_minus_qw(const SignedCycleType& c);

/// All classes of W(B_n) (type_d false) or W(D_n), in a fixed order.
std::vector<SignedCycleType> classical_classes(int n, bool type_d);
std::int64_t class_size(const SignedCycleType& c, bool type_d);

std::vector<Partition> partitions(int n);
/// n(alpha) = sum (i-1) alpha_i.
int partition_n(const Partition& p);
int partition_size(const Partition& p);
std::string partition_string(const Partition& p);

/// chi^alpha of S_n on cycle type mu.
std::int64_t symmetric_character(const Partition& alpha, const Partition& mu);
/// Character of the W(B_n) irreducible (alpha, beta) on the class (pos, neg).
/// ((n), ()) is the trivial character and ((), (1^n)) the sign character.
std::int64_t hyperoctahedral_character(const Partition& alpha, const Partition& beta, const Partition& pos,
                                       const Partition& neg);

}  // namespace uflip
