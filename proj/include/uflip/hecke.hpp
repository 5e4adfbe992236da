#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/coxeter.hpp"
#include "uflip/involution.hpp"
#include "uflip/polynomial.hpp"

namespace uflip {

/// Element of H in the basis T_w (w a CoxeterGroup index); polynomials in v.
using HeckeElement = std::map<std::size_t, RatPoly>;
/// Same with v specialised to a rational number.
using HeckeValue = std::map<std::size_t, Rat>;

/// Default largest rank for which the regular representation is built.
inline constexpr int kDefaultHeckeRankGate = 3;
/// The gate from UFLIP_HECKE_RANK_GATE when set, else the default.
int hecke_rank_gate_from_env();

/// Generic Iwahori-Hecke algebra with (T_s + 1)(T_s - v^2) = 0, acting on
/// itself by left multiplication.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const CoxeterGroup> w);
  /// Throws GateError when rank exceeds rank_gate.
  static HeckeAlgebra build(const std::string& type, int rank, int rank_gate = kDefaultHeckeRankGate);

  const CoxeterGroup& coxeter() const { return *w_; }
  std::size_t dimension() const { return w_->order(); }

  static HeckeElement basis(std::size_t w) { return {{w, RatPoly(1)}}; }
  HeckeElement left_multiply(int s, const HeckeElement& x) const;
  HeckeElement right_multiply(const HeckeElement& x, int s) const;
  /// T_w x along a reduced word of w.
  HeckeElement left_multiply_T(std::size_t w, const HeckeElement& x) const;
  HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const;

  HeckeValue left_multiply(int s, const HeckeValue& x, const Rat& v) const;
  HeckeValue left_multiply_T(std::size_t w, const HeckeValue& x, const Rat& v) const;

  /// Columns of the matrix of left multiplication by T_s (or T_w0).
  std::vector<HeckeElement> generator_matrix(int s) const;
  std::vector<HeckeElement> Tw0_matrix() const;

  /// (T_s + 1)(T_s - v^2) = 0 on every basis vector.
  bool verify_quadratic(nlohmann::json* cex = nullptr) const;
  /// (T_s T_t ...)_{m} = (T_t T_s ...)_{m} on every basis vector.
  bool verify_braid(nlohmann::json* cex = nullptr) const;
  /// T_x T_y = T_{xy} whenever lengths add, for all pairs (|W| <= limit) .
  bool verify_length_additivity(std::size_t limit = 200, nlohmann::json* cex = nullptr) const;
  /// T_s T_w0 = T_w0 T_s as operators on every basis vector.
  bool verify_Tw0_central(nlohmann::json* cex = nullptr) const;

  /// Trace of left multiplication by T_w.
  RatPoly regular_trace(std::size_t w) const;

 private:
  std::shared_ptr<const CoxeterGroup> w_;
  std::vector<int> w0_word_;
};

struct CentralScalarCheck {
  bool pass = false;
  Rat v0;
  /// Distinct (-1)^{b_E} v0^{2 nu - a_c - A_c}, sorted.
  std::vector<Rat> predicted;
  /// Product over predicted of (T_w0 - lambda) vanishes.
  bool annihilates = false;
  /// Scalars whose omission still leaves a vanishing product (must be empty).
  std::vector<Rat> redundant;
};

/// Spectrum of T_w0 at v = v0 against the family data.
CentralScalarCheck verify_central_scalar(const HeckeAlgebra& h, const InvolutionTable& t, const Rat& v0);
nlohmann::json to_json(const CentralScalarCheck& c);

/// tr(T_w, E(v)) for every element w (CoxeterGroup index) and irreducible E
/// (WeylGroup index), for rank 2 (B2, G2) from explicit two-dimensional models.
std::vector<std::vector<RatPoly>> dihedral_hecke_traces(const WeylGroup& w);

}  // namespace uflip
