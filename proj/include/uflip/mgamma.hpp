#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/fourier_model.hpp"
#include "uflip/perm_group.hpp"
#include "uflip/rational.hpp"

namespace uflip {

/// An element (g, rho) of M(Gamma): g is given by its conjugacy class (whose
/// lexicographically minimal member is the representative) and rho by its
/// index in the character table of Z(representative).
struct MGammaElt {
  std::size_t g_class = 0;
  std::size_t rho = 0;
  friend auto operator<=>(const MGammaElt&, const MGammaElt&) = default;
};

/// M(Gamma) for a small permutation group, with its Fourier pairing and the
/// convolution action of the invertible objects M(Gamma)_*.
class MGamma {
 public:
  explicit MGamma(PermGroup gamma, std::string name = "");

  const PermGroup& group() const { return gamma_; }
  const std::string& name() const { return name_; }
  const std::vector<MGammaElt>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const MGammaElt& x) const;
  /// Z(g) for the representative of a class.
  const PermGroup& centralizer(std::size_t g_class) const { return *centralizers_.at(g_class); }

  /// <x, y> = sum / (|Z(g)| |Z(g')|), the sum running over h in Gamma with
  /// h g' h^-1 in Z(g). The sum is returned exactly; it is real but can be
  /// irrational (Gamma = S5 gives values in Q(sqrt 5)).
  Cyclotomic pairing_sum(const MGammaElt& x, const MGammaElt& y) const;
  /// Cached pairing_sum by element index.
  const Cyclotomic& pairing_sum(std::size_t i, std::size_t j) const { return sums_.at(i).at(j); }
  /// |Z(g)| |Z(g')|.
  std::int64_t pairing_denominator(std::size_t i, std::size_t j) const;
  bool pairing_is_rational() const { return rational_; }

  /// <x, y> as a rational number; throws uflip::Error if it is irrational.
  Rat pairing(const MGammaElt& x, const MGammaElt& y) const { return pairing(index_of(x), index_of(y)); }
  Rat pairing(std::size_t i, std::size_t j) const;
  /// Whole matrix in enumeration order; throws uflip::Error if some entry is irrational.
  std::vector<std::vector<Rat>> pairing_matrix() const;

  bool is_invertible(const MGammaElt& x) const;
  std::vector<MGammaElt> invertibles() const;
  /// (z, chi) * (g, rho) = (zg, chi|Z(g) (x) rho) for central z and linear chi.
  MGammaElt convolve_star(const MGammaElt& s, const MGammaElt& x) const;

  std::int64_t rho_degree(const MGammaElt& x) const;
  std::size_t centralizer_order(const MGammaElt& x) const { return centralizer(x.g_class).order(); }
  Rat dim_over_centralizer(const MGammaElt& x) const;

  /// <z, x*y> = |Z(g)| / dim(rho) <z,x><z,y> for all x in M, y in M_* with z = (g, rho).
  bool verify_ring_hom(const MGammaElt& z) const;
  bool verify_ring_hom() const;

  /// Element whose class contains g and whose character takes the given values
  /// on the given elements of Z(representative). Values are integers; the
  /// element is looked up after conjugating g to its class representative.
  MGammaElt find(const Perm& g, const std::map<Perm, std::int64_t>& rho_values) const;

  /// The element (1, chi) for the linear character chi of Gamma given by values on classes.
  MGammaElt identity_class_with(const std::vector<int>& linear_values) const;

  std::string label(const MGammaElt& x) const;

 private:
  // Value of rho (a character of Z(rep of g_class)) at an element of Gamma.
  Cyclotomic rho_at(std::size_t g_class, std::size_t rho, std::size_t gamma_element) const;

  PermGroup gamma_;
  std::string name_;
  std::vector<std::unique_ptr<PermGroup>> centralizers_;
  // zclass_[c][h] = class of element h of Gamma inside Z(rep of c), or npos
  std::vector<std::vector<std::size_t>> zclass_;
  std::vector<MGammaElt> elements_;
  std::vector<std::vector<Cyclotomic>> sums_;
  bool rational_ = true;
};

/// FourierModel backed by an MGamma.
class GroupFourierModel : public FourierModel {
 public:
  explicit GroupFourierModel(std::shared_ptr<const MGamma> mgamma);

  const MGamma& mgamma() const { return *mgamma_; }
  std::size_t size() const override { return mgamma_->size(); }
  std::size_t identity() const override;
  Rat pairing(std::size_t x, std::size_t y) const override { return mgamma_->pairing(x, y); }
  bool is_invertible(std::size_t x) const override;
  std::size_t convolve(std::size_t s, std::size_t x) const override;
  Rat dim_over_centralizer(std::size_t x) const override;
  std::string label(std::size_t x) const override;
  std::string group_name() const override { return mgamma_->name(); }

 private:
  std::shared_ptr<const MGamma> mgamma_;
};

/// Pairing matrix as JSON rows of "num/den" strings, in enumeration order.
/// Irrational entries are written as "(sum)/den" with the sum in E(n) notation.
nlohmann::json pairing_matrix_json(const MGamma& m);

}  // namespace uflip
