#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "uflip/fourier_model.hpp"
#include "uflip/mgamma.hpp"
#include "uflip/polynomial.hpp"
#include "uflip/symbols.hpp"
#include "uflip/weyl.hpp"

namespace uflip {

struct FamilyMember {
  /// Index into WeylGroup::irreducibles(); npos for hand-built families.
  std::size_t irr = static_cast<std::size_t>(-1);
  std::string label;
  std::int64_t dim = 0;
  int b = 0;
  RatPoly fake_degree;
  /// m_E as an element index of the model.
  std::size_t m = 0;
};

/// A family c with its injection c -> M(Gamma_c). Members are sorted by (b, label),
/// so members[0] is the special representation.
struct Family {
  std::size_t id = 0;
  std::vector<FamilyMember> members;
  std::shared_ptr<const FourierModel> model;
  std::optional<ClassicalFamily> classical;
  /// Set when the model is M(Gamma) of a permutation group.
  std::shared_ptr<const MGamma> mgamma;

  std::size_t size() const { return members.size(); }
  const FamilyMember& special() const { return members.front(); }
  /// b_E - b_{E(c)}.
  int b_prime(std::size_t i) const { return members.at(i).b - special().b; }
  std::string gamma() const { return model->group_name(); }
  /// Position of the member with m_E = m, if any.
  std::optional<std::size_t> member_at(std::size_t m) const;
  std::string name() const;
};

/// Partition of Irr(W) into families.
class FamilyTable {
 public:
  /// Throws IntegrityError when the computed data disagrees with the symbol
  /// combinatorics or the embedded exceptional tables.
  static std::shared_ptr<const FamilyTable> build(std::shared_ptr<const WeylGroup> w);

  const WeylGroup& weyl() const { return *weyl_; }
  const std::shared_ptr<const WeylGroup>& weyl_ptr() const { return weyl_; }
  const std::vector<Family>& families() const { return families_; }
  const Family& family(std::size_t id) const { return families_.at(id); }
  std::size_t family_of(std::size_t irr) const { return family_of_.at(irr); }
  /// Position of irr inside its family's member list.
  std::size_t position(std::size_t irr) const { return position_.at(irr); }
  /// sum over c of |M(Gamma_c)|.
  std::size_t unipotent_count() const;

 private:
  FamilyTable() = default;
  void build_classical();
  void build_exceptional();
  void finish();

  std::shared_ptr<const WeylGroup> weyl_;
  std::vector<Family> families_;
  std::vector<std::size_t> family_of_;
  std::vector<std::size_t> position_;
};

std::shared_ptr<const FamilyTable> build_families(const std::string& type, int rank);

/// The embedded G2/F4 tables, or the file named by UFLIP_EXCEPTIONAL_DATA when set.
const nlohmann::json& exceptional_data();
/// Checks the embedded record of one type against the computed table; returns
/// the list of mismatches (empty when consistent).
std::vector<std::string> validate_exceptional_data(const WeylGroup& w);

/// M(S_k) with shared storage; k <= 5.
std::shared_ptr<const MGamma> symmetric_mgamma(int k);

nlohmann::json to_json(const Family& f);
nlohmann::json families_json(const FamilyTable& t);

}  // namespace uflip
