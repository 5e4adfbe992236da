#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uflip/perm_group.hpp"
#include "uflip/polynomial.hpp"

namespace uflip {

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix (Bourbaki numbering) for "A1", "B<n>", "C<n>", "D<n>", "G2", "F4".
IntMatrix cartan_matrix(const std::string& type, int rank);

/// Finite Weyl group given by a Cartan matrix A (A[i][j] = <alpha_i^vee, alpha_j>),
/// realised as permutations of its root system. Elements are numbered in
/// breadth-first order from the identity, so lengths are non-decreasing.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(IntMatrix cartan, std::size_t max_order = 50000);

  int rank() const { return static_cast<int>(cartan_.size()); }
  std::size_t order() const { return elements_.size(); }
  int num_positive_roots() const { return static_cast<int>(roots_.size() / 2); }
  const IntMatrix& cartan() const { return cartan_; }
  /// Roots in simple-root coordinates; the first rank() are the simple roots,
  /// then the remaining positive roots, then the negatives in the same order.
  const std::vector<std::vector<int>>& roots() const { return roots_; }
  /// alpha_i long (true) or short, from the symmetrised Cartan matrix.
  bool is_long(int s) const { return long_[s]; }

  std::size_t identity() const { return 0; }
  std::size_t longest() const { return longest_; }
  int length(std::size_t w) const { return length_.at(w); }
  /// s * w with s in 0..rank-1.
  std::size_t left_multiply(int s, std::size_t w) const { return lmul_.at(s).at(w); }
  std::size_t right_multiply(std::size_t w, int s) const { return rmul_.at(s).at(w); }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const;
  std::size_t from_word(const std::vector<int>& word) const;
  std::vector<int> reduced_word(std::size_t w) const;
  /// Permutation of root indices.
  const Perm& root_permutation(std::size_t w) const { return elements_.at(w); }
  /// Matrix on simple-root coordinates; column j is w(alpha_j).
  IntMatrix matrix(std::size_t w) const;
  /// det(1 - q w) on the reflection representation.
  RatPoly det_one_minus_qw(std::size_t w) const;

  /// The same group as a permutation group on roots.
  PermGroup perm_group() const;
  /// Index of the element with the given root permutation.
  std::size_t index_of(const Perm& p) const;

 private:
  IntMatrix cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<bool> long_;
  std::vector<Perm> elements_;
  std::vector<Perm> sorted_;
  std::vector<std::size_t> sorted_index_;
  std::vector<int> length_;
  std::vector<std::vector<std::size_t>> lmul_;
  std::vector<std::vector<std::size_t>> rmul_;
  std::size_t longest_ = 0;
};

}  // namespace uflip
