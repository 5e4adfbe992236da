#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/families.hpp"
#include "uflip/polynomial.hpp"

namespace uflip {

/// All m in M(Gamma_c)_* with <m_E, m> = (-1)^{b'_E} dim(rho) / |Z(g)| for every
/// E in c, m_E = (g, rho).
struct McSolution {
  std::vector<std::size_t> solutions;
};

/// Exhaustive search over the invertible elements of the model.
McSolution solve_mc(const Family& f);

/// m(c) from the case analysis: the symbol formula for classical families,
/// (1, sign) or (1, 1) when Gamma_c is symmetric. Throws std::invalid_argument
/// for |c| = 2, where there are two answers.
std::size_t closed_form_mc(const Family& f);

/// 1 when |c| != 2; otherwise 1 on the image of c and -1 off it.
int delta(const Family& f, std::size_t m);

/// D_{xi_m}(q) = sum_E Delta(m) <m_E, m> FD_E(q).
RatPoly degree_polynomial(const Family& f, std::size_t m);

/// The involution on one family. For |c| = 2 a branch (0 or 1, an index into
/// solve_mc's solutions) must be supplied before bang can be used.
class FamilyInvolution {
 public:
  explicit FamilyInvolution(const Family& f, std::optional<std::size_t> branch = std::nullopt);

  const Family& family() const { return family_; }
  const McSolution& mc_solutions() const { return solutions_; }
  bool ambiguous() const { return family_.size() == 2; }
  /// The m(c) in use; throws Error("ambiguous, supply branch") when |c| = 2 and none was chosen.
  std::size_t mc() const;
  /// m^! = m(c) * m.
  std::size_t bang(std::size_t m) const;
  int delta(std::size_t m) const { return uflip::delta(family_, m); }
  const RatPoly& degree(std::size_t m) const { return degrees_.at(m); }
  /// a_c and A_c read off the special representative xi_{(1,1)}.
  int a() const { return a_; }
  int A() const { return A_; }

  /// The search finds one solution (two when |c| = 2) and for
  /// |c| != 2 it is the closed form.
  bool verify_mc_unique(nlohmann::json* counterexample = nullptr) const;
  /// <m_E, m(c)*m> = (-1)^{b'_E} <m_E, m> for all E and m.
  bool verify_sign_rule(nlohmann::json* counterexample = nullptr) const;
  /// D_{m^!}(q) = (-1)^{A_c} D_m(-q) and Delta(m^!) Delta(m) = (-1)^{a_c + A_c}.
  bool verify_degree_flip(nlohmann::json* counterexample = nullptr) const;
  /// All members share valuation a and degree A.
  bool a_A_well_defined(nlohmann::json* counterexample = nullptr) const;
  /// bang(bang(m)) = m for all m.
  bool is_involution() const;

  /// {family, gamma, size, mc, a, A, checks: {mc_unique, sign_rule, degree_flip, aA}}.
  nlohmann::json report() const;

 private:
  Family family_;
  McSolution solutions_;
  std::optional<std::size_t> chosen_;
  std::vector<RatPoly> degrees_;
  int a_ = 0;
  int A_ = 0;
};

/// A unipotent representation xi_m.
struct UnipotentRep {
  std::size_t family = 0;
  std::size_t m = 0;
  /// The E with m_E = m, when there is one.
  std::optional<std::size_t> irr;
  std::string label;
  RatPoly degree;
  int a = 0;
  int A = 0;
  int delta = 1;
};

/// Involutions of every family of W, plus a flat list of U.
class InvolutionTable {
 public:
  explicit InvolutionTable(std::shared_ptr<const FamilyTable> families);

  const FamilyTable& families() const { return *families_; }
  const WeylGroup& weyl() const { return families_->weyl(); }
  const FamilyInvolution& family(std::size_t id) const { return involutions_.at(id); }
  const std::vector<UnipotentRep>& unipotents() const { return unipotents_; }
  /// Index in unipotents() of xi_m in family id.
  std::size_t index(std::size_t family, std::size_t m) const { return offset_.at(family) + m; }
  /// Index of xi_{m_E}.
  std::size_t principal(std::size_t irr) const;
  /// Index of xi^!.
  std::size_t bang(std::size_t xi) const;

  nlohmann::json report() const;
  bool all_pass() const;

 private:
  std::shared_ptr<const FamilyTable> families_;
  std::vector<FamilyInvolution> involutions_;
  std::vector<UnipotentRep> unipotents_;
  std::vector<std::size_t> offset_;
};

}  // namespace uflip
