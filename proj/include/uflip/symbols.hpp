#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/fourier_model.hpp"
#include "uflip/rational.hpp"

namespace uflip {

/// Finite set of naturals, kept sorted without repeats.
using IntSet = std::vector<int>;

/// U # U'.
IntSet symmetric_difference(const IntSet& u, const IntSet& v);
IntSet set_union(const IntSet& u, const IntSet& v);
IntSet set_intersection(const IntSet& u, const IntSet& v);
IntSet set_minus(const IntSet& u, const IntSet& v);

/// Two-row symbol with strictly increasing rows.
class Symbol {
 public:
  Symbol() = default;
  /// Throws std::invalid_argument unless both rows are strictly increasing naturals.
  Symbol(std::vector<int> top, std::vector<int> bottom);

  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  int defect() const { return static_cast<int>(top_.size()) - static_cast<int>(bottom_.size()); }
  int entry_sum() const;

  /// Removes the common prefix 0 from both rows as long as possible.
  Symbol reduced() const;
  /// Prepends 0..k-1 to both rows and adds k to the old entries.
  Symbol shifted(int k) const;
  Symbol swapped() const { return Symbol(bottom_, top_); }

  /// n from the entry sum; defined for defect 0 and 1.
  int rank() const;

  /// "(a1,a2,...|b1,...)".
  std::string to_string() const;
  /// Two-row ASCII rendering with the rows staggered.
  std::string to_pretty() const;
  static Symbol parse(std::string_view text);

  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::vector<int> top_;
  std::vector<int> bottom_;
};

/// Partitions are stored with parts in decreasing order and no zeros.
using Partition = std::vector<int>;

/// Symbol of the bipartition (alpha, beta): the top row has m + 1 entries for
/// defect 1 and m entries for defect 0, the bottom row has m entries. Not reduced.
Symbol symbol_of_bipartition(const Partition& alpha, const Partition& beta, int defect, int m);
/// Inverse of symbol_of_bipartition on rows of any length.
std::pair<Partition, Partition> bipartition_of_symbol(const Symbol& s);

enum class FamilyKind { BC, D };
std::string to_string(FamilyKind kind);

/// A family of type B/C or D given by the data of its special symbol:
/// the special symbol is (Z2 u A over Z2 u B).
struct ClassicalFamily {
  FamilyKind kind = FamilyKind::BC;
  IntSet Z2;
  IntSet A;
  IntSet B;
  /// Only for type D with A = B = {}: +1 or -1 tells the two members of a
  /// degenerate symbol apart.
  int split = 0;

  IntSet Z1() const { return set_union(A, B); }
  int d() const { return static_cast<int>(B.size()); }
  /// Rank of Gamma_c as an elementary abelian 2-group.
  int gamma_rank() const;
  int rank() const;
  Symbol special_symbol() const;
  /// Throws std::invalid_argument naming the violated condition.
  void validate() const;

  /// The family containing a symbol of the given kind, in reduced form.
  static ClassicalFamily containing(const Symbol& s, FamilyKind kind, int split = 0);

  std::string to_string() const;
  friend auto operator<=>(const ClassicalFamily&, const ClassicalFamily&) = default;
};

nlohmann::json to_json(const ClassicalFamily& f);

/// The element Lambda_Y of M(Gamma_c); in type D the representative is the
/// lexicographically smaller of Y and its complement in Z1.
struct LambdaY {
  IntSet Y;
  friend auto operator<=>(const LambdaY&, const LambdaY&) = default;
};

LambdaY canonical_lambda(const ClassicalFamily& f, IntSet Y);
/// Lambda_Y = (Z2 u (Z1 - Y) over Z2 u Y).
Symbol symbol_of(const ClassicalFamily& f, const LambdaY& x);
/// The element of M(Gamma_c) whose symbol is s up to shift (and row order in type D).
LambdaY lambda_of(const ClassicalFamily& f, const Symbol& s);
/// Y # B, the coordinate in V (type D: read modulo Z1).
IntSet v_coordinate(const ClassicalFamily& f, const LambdaY& x);
/// True when x is the image of a member of the family (|Y| = d).
bool is_member(const ClassicalFamily& f, const LambdaY& x);

std::vector<LambdaY> enumerate_MGamma_symbols(const ClassicalFamily& f);
std::vector<LambdaY> family_members(const ClassicalFamily& f);

Rat symbol_pairing(const ClassicalFamily& f, const LambdaY& x, const LambdaY& y);
/// Convolution: V-coordinates add.
LambdaY convolve(const ClassicalFamily& f, const LambdaY& s, const LambdaY& x);

/// b'_E mod 2 from the odd/even entry description; throws
/// std::invalid_argument("not a family member") off the image.
int b_prime_parity(const ClassicalFamily& f, const LambdaY& x);
/// sum(B) - sum(Y), the displayed integer whose parity is b'_E.
int b_prime_sum(const ClassicalFamily& f, const LambdaY& x);

IntSet odd_entries(const IntSet& s);
IntSet even_entries(const IntSet& s);
/// Z1_odd or Z1_ev, whichever has even size (type B/C only).
IntSet compute_Zstar(const ClassicalFamily& f);
LambdaY closed_form_mc(const ClassicalFamily& f);
/// Symbol of m(c) * x obtained by moving every odd entry of Z1 to the other
/// row (and putting the longer row on top in type B/C).
Symbol odd_entry_swap_view(const ClassicalFamily& f, const LambdaY& x);

/// Rank over F2 of the vectors Y # B for the family members, and whether
/// they span V (resp. V+).
int member_span_rank(const ClassicalFamily& f);

/// M(Gamma_c) in the subset model.
class SymbolFourierModel : public FourierModel {
 public:
  explicit SymbolFourierModel(ClassicalFamily f);

  const ClassicalFamily& family() const { return family_; }
  const std::vector<LambdaY>& elements() const { return elements_; }
  std::size_t index_of(const LambdaY& x) const;

  std::size_t size() const override { return elements_.size(); }
  std::size_t identity() const override { return identity_; }
  Rat pairing(std::size_t x, std::size_t y) const override;
  bool is_invertible(std::size_t) const override { return true; }
  std::size_t convolve(std::size_t s, std::size_t x) const override;
  Rat dim_over_centralizer(std::size_t) const override { return pow2(-family_.gamma_rank()); }
  std::string label(std::size_t x) const override;
  std::string group_name() const override;

 private:
  ClassicalFamily family_;
  std::vector<LambdaY> elements_;
  std::size_t identity_ = 0;
};

}  // namespace uflip
