#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/coxeter.hpp"
#include "uflip/polynomial.hpp"
#include "uflip/signed_perm.hpp"
#include "uflip/symbols.hpp"

namespace uflip {

struct WeylClass {
  std::string label;
  std::int64_t size = 0;
  /// det(1 - q w) on the reflection representation.
  RatPoly det;
  /// Class of w * w0.
  std::size_t times_w0 = 0;
  /// A reduced word (generators numbered from 1) of a representative.
  std::vector<int> word;
};

struct WeylIrr {
  std::string label;
  std::int64_t dim = 0;
  /// Smallest i with E in the i-th symmetric power of the reflection representation.
  int b = 0;
  std::vector<std::int64_t> values;  // by class
  RatPoly fake_degree;
  // classical types only
  Partition alpha;
  Partition beta;
  int split = 0;
};

/// Irr(W) with character values by class, for B_n/C_n (n >= 1), D_n (n even,
/// n >= 4), G2 and F4.
class WeylGroup {
 public:
  /// type is one of "A" (rank 1 only), "B", "C", "D", "G", "F"; "G2" and "F4" are
  /// also accepted. Throws std::invalid_argument for anything else.
  static std::shared_ptr<const WeylGroup> build(const std::string& type, int rank);

  /// "B", "C", "D", "G" or "F".
  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return type_ + std::to_string(rank_); }
  bool is_classical() const { return type_ == "B" || type_ == "C" || type_ == "D"; }
  bool is_type_d() const { return type_ == "D"; }

  std::int64_t order() const { return order_; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Number of positive roots, the length of w0.
  int nu() const { return nu_; }

  const std::vector<WeylClass>& classes() const { return classes_; }
  const std::vector<WeylIrr>& irreducibles() const { return irrs_; }
  std::size_t identity_class() const { return identity_class_; }
  std::size_t w0_class() const { return w0_class_; }
  std::size_t find_class(const std::string& label) const;
  std::size_t find_irreducible(const std::string& label) const;
  std::size_t trivial() const { return find_irreducible(trivial_label_); }
  std::size_t sign() const { return find_irreducible(sign_label_); }

  std::int64_t character_value(std::size_t irr, std::size_t cls) const { return irrs_.at(irr).values.at(cls); }
  /// Class of the product of simple reflections s_{word[0]} s_{word[1]} ...,
  /// generators numbered from 1 in Bourbaki order.
  std::size_t class_of_word(const std::vector<int>& word) const;
  /// Class of w^k for w in class c.
  std::size_t power_class(std::size_t c, int k) const;

  /// |W|^-1 sum_w f(w) g(w^-1) for class functions given by value vectors.
  Rat inner_product(const std::vector<Rat>& f, const std::vector<Rat>& g) const;
  /// Graded multiplicity of a class function in the coinvariant algebra:
  /// prod_j (1 - q^{d_j}) |W|^-1 sum_w f(w) / det(1 - q w).
  RatPoly molien(const std::vector<Rat>& values) const;
  /// prod_j (1 + q + ... + q^{d_j - 1}).
  RatPoly poincare_polynomial() const;
  /// Every exponent of the fake degree has the parity of b_E.
  bool fake_degree_parity_check(std::size_t irr) const;

  /// Symbol of a classical irreducible with m = rank() (unreduced).
  Symbol symbol(std::size_t irr) const;
  /// Classical class data; empty for exceptional types.
  const std::vector<SignedCycleType>& signed_classes() const { return signed_classes_; }
  /// Coxeter engine (exceptional types, and classical on demand for rank <= 4).
  std::shared_ptr<const CoxeterGroup> coxeter() const;

 private:
  WeylGroup() = default;
  void build_classical();
  void build_exceptional();
  void finish();  // fake degrees, b, w0 map

  std::string type_;
  int rank_ = 0;
  std::int64_t order_ = 0;
  std::vector<int> degrees_;
  int nu_ = 0;
  std::vector<WeylClass> classes_;
  std::vector<WeylIrr> irrs_;
  std::size_t identity_class_ = 0;
  std::size_t w0_class_ = 0;
  std::string trivial_label_;
  std::string sign_label_;
  std::vector<SignedCycleType> signed_classes_;
  std::shared_ptr<const CoxeterGroup> coxeter_;
  std::shared_ptr<const PermGroup> perm_;
  std::vector<std::size_t> perm_class_to_class_;
};

nlohmann::json character_table_json(const WeylGroup& w);

/// <chi_i, chi_j> = delta_ij over classes with class sizes.
bool verify_orthogonality(const WeylGroup& w, nlohmann::json* cex = nullptr);
/// sum_E dim(E) FD_E = prod_j (1 + q + ... + q^{d_j - 1}).
bool verify_poincare(const WeylGroup& w, nlohmann::json* cex = nullptr);
/// Parity of every fake degree, tr(w0, E) = (-1)^{b_E} dim E, FD_E(1) = dim E
/// and the Poincare identity.
bool verify_fake_degrees(const WeylGroup& w, nlohmann::json* cex = nullptr);

/// Label of the classical irreducible: "alpha.beta" for B/C, "alpha.beta" with
/// alpha >= beta for D, split members get "+" or "-".
std::string bipartition_label(const Partition& alpha, const Partition& beta, int split = 0);

}  // namespace uflip
