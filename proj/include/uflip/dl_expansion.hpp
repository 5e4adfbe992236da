#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/involution.hpp"
#include "uflip/polynomial.hpp"
#include "uflip/rational.hpp"

namespace uflip {

/// Element of K tensor Q: unipotent index (into InvolutionTable::unipotents()) to
/// multiplicity. No zero entries are stored.
class VirtualUnip {
 public:
  void add(std::size_t xi, const Rat& c);
  Rat operator[](std::size_t xi) const;
  const std::map<std::size_t, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const VirtualUnip&, const VirtualUnip&) = default;

 private:
  std::map<std::size_t, Rat> terms_;
};

/// Weight k to the weight-k part.
using GradedVirtualUnip = std::map<int, VirtualUnip>;

/// (xi_m : R_E) = Delta(m) <m_E, m> for E in the family of xi, 0 otherwise.
Rat multiplicity_R_E(const InvolutionTable& t, std::size_t xi, std::size_t irr);

/// H*(X_w) = sum_E tr(w, E) R_E for w in the given class of W.
VirtualUnip hstar_expansion(const InvolutionTable& t, std::size_t w_class);
/// Same for a word in the simple reflections (numbered from 1).
VirtualUnip hstar_expansion_word(const InvolutionTable& t, const std::vector<int>& word);

/// (xi : H*(X_{w w0})) = (-1)^{A} (xi^! : H*(X_w)) for every class and every xi. On failure the counterexample
/// names the class, xi and both sides.
bool verify_w0_duality(const InvolutionTable& t, nlohmann::json* counterexample = nullptr);

/// sum_k (xi_m : H*_k(X_w)) v^k = sum_{E in c} tr(T_w, E(v)) (xi_m : R_E), from
/// supplied Hecke traces indexed like WeylGroup::irreducibles().
GradedVirtualUnip graded_expansion(const InvolutionTable& t, const std::vector<RatPoly>& hecke_traces);

/// The right side of the weight-shift identity: the predicted graded expansion
/// of H*(X_{w w0}), namely sum over xi of (-1)^{A} (xi : H*_{k - 2nu + a + A}(X_w)) xi^!.
/// Before propagating, the supplied traces at w and at w w0 are checked against
/// tr(T_{w w0}, E(v)) = (-1)^{b_E} v^{2 nu - a_c - A_c} tr(T_w, E(v)); the first
/// irreducible that violates it raises ScalarRelationError.
GradedVirtualUnip weight_shift_expansion(const InvolutionTable& t, const std::vector<RatPoly>& traces_w,
                                         const std::vector<RatPoly>& traces_ww0);

/// graded_expansion(traces_ww0) == weight_shift_expansion(traces_w, traces_ww0).
bool verify_weight_shift(const InvolutionTable& t, const std::vector<RatPoly>& traces_w,
                         const std::vector<RatPoly>& traces_ww0);

/// Sum over k of a graded expansion.
VirtualUnip total(const GradedVirtualUnip& g);

struct W0Sums {
  /// sum_E (-1)^{A_{xi_E}} dim(E) xi_E^!
  VirtualUnip ungraded;
  /// the same sum split by k = 2 nu - a - A
  GradedVirtualUnip graded;
};

/// xi_E for the principal series: the xi with (xi : H*(X_1)) = dim E.
std::size_t principal_series_member(const InvolutionTable& t, std::size_t irr);

W0Sums w0_sums(const InvolutionTable& t);

/// Compares w0_sums with hstar_expansion at the class of w0, and the
/// graded sum with its total.
bool verify_w0_sums(const InvolutionTable& t, nlohmann::json* counterexample = nullptr);

/// {w, coefficients: [[label, "num/den"], ...]}
nlohmann::json expansion_json(const InvolutionTable& t, const std::string& w_label, const VirtualUnip& x);
nlohmann::json graded_json(const InvolutionTable& t, const GradedVirtualUnip& g);

}  // namespace uflip
