#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/cyclotomic.hpp"

namespace uflip {

/// Permutation of {0, ..., n-1}; p[i] is the image of i.
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(std::size_t degree);
/// Function composition: (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
int perm_order(const Perm& p);
/// 0 for even, 1 for odd.
int perm_parity(const Perm& p);
/// 1-based cycle notation, e.g. "(1,2)(3,4,5)"; "()" for the identity.
std::string cycle_string(const Perm& p);
Perm parse_cycles(std::string_view text, std::size_t degree);

/// Character table with exact cyclotomic entries.
struct CharTable {
  int cyclotomic_order = 1;                    ///< values lie in Z[zeta_N]
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Cyclotomic>> rows;   ///< rows[irreducible][class]

  std::size_t num_irreducibles() const { return rows.size(); }
  std::int64_t degree(std::size_t irr) const;
};

struct ConjugacyClass {
  std::size_t representative = 0;  ///< element index (lexicographically minimal member)
  std::vector<std::size_t> members;
  std::size_t size() const { return members.size(); }
};

/// Finite permutation group of modest order, fully enumerated.
///
/// Elements are sorted lexicographically, so index 0 is the identity and each
/// class representative is the smallest element of its class. Classes and the
/// character table are computed at construction; the object is immutable
/// afterwards.
class PermGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10000;

  PermGroup(std::size_t degree, const std::vector<Perm>& generators);
  static PermGroup symmetric(int n);
  /// Elementary abelian group (Z/2)^rank acting on 2*rank points.
  static PermGroup elementary_abelian_2(int rank);
  static PermGroup trivial();

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  /// Throws std::out_of_range if p is not in the group.
  std::size_t index_of(const Perm& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const { return inverse_.at(a); }
  std::size_t power(std::size_t a, long k) const;
  int element_order(std::size_t a) const;
  int exponent() const { return exponent_; }
  bool is_abelian() const;
  bool is_central(std::size_t a) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_.at(element); }
  std::size_t class_of(const Perm& p) const { return class_of_.at(index_of(p)); }
  /// Some h with h * a * h^-1 = b; throws if a, b are not conjugate.
  std::size_t conjugator(std::size_t a, std::size_t b) const;

  /// Z(g) for an element given by index; throws std::out_of_range if g not in G.
  PermGroup centralizer(std::size_t g) const;
  PermGroup centralizer(const Perm& g) const { return centralizer(index_of(g)); }

  const CharTable& character_table() const { return table_; }
  /// Value of irreducible `irr` at the element with index `element`.
  const Cyclotomic& character_value(std::size_t irr, std::size_t element) const {
    return table_.rows.at(irr).at(class_of_.at(element));
  }

  /// Sign character of a symmetric group on its moved points; throws if the
  /// group is not the full symmetric group on its support.
  std::vector<int> sign_character() const;

 private:
  explicit PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements);
  void build();
  void build_classes();
  void build_character_table();

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> mult_;  // dense table when order is small enough
  int exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  CharTable table_;
};

/// {"classes": [...], "sizes": [...], "rows": [[...]]} with values as strings.
nlohmann::json to_json(const PermGroup& g);

}  // namespace uflip
