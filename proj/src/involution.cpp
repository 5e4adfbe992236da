#include "uflip/involution.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uflip/error.hpp"

namespace uflip {

namespace {

Rat sign_power(int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

bool satisfies_1_3(const Family& f, std::size_t m) {
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::size_t me = f.members[k].m;
    if (f.model->pairing(me, m) != sign_power(f.b_prime(k)) * f.model->dim_over_centralizer(me)) return false;
  }
  return true;
}

}  // namespace

McSolution solve_mc(const Family& f) {
  McSolution out;
  for (std::size_t m : f.model->invertibles())
    if (satisfies_1_3(f, m)) out.solutions.push_back(m);
  return out;
}

std::size_t closed_form_mc(const Family& f) {
  if (f.size() == 2) throw std::invalid_argument("m(c) is not unique when |c| = 2");
  if (f.classical) {
    auto model = std::dynamic_pointer_cast<const SymbolFourierModel>(f.model);
    if (!model) throw std::invalid_argument("classical family without a symbol model");
    return model->index_of(uflip::closed_form_mc(*f.classical));
  }
  if (!f.mgamma) throw std::invalid_argument("family has no closed form for m(c)");
  const std::size_t one = f.model->identity();
  bool has_odd = false;
  for (std::size_t k = 0; k < f.size(); ++k) has_odd = has_odd || (f.b_prime(k) % 2 != 0);
  if (!has_odd || f.mgamma->group().order() == 1) return one;
  return f.mgamma->index_of(f.mgamma->identity_class_with(f.mgamma->group().sign_character()));
}

int delta(const Family& f, std::size_t m) {
  if (f.size() != 2) return 1;
  return f.member_at(m) ? 1 : -1;
}

RatPoly degree_polynomial(const Family& f, std::size_t m) {
  RatPoly d;
  for (const auto& e : f.members) {
    const Rat p = f.model->pairing(e.m, m);
    if (!p.is_zero()) d += e.fake_degree.scaled(p);
  }
  return delta(f, m) == 1 ? d : -d;
}

FamilyInvolution::FamilyInvolution(const Family& f, std::optional<std::size_t> branch)
    : family_(f), solutions_(solve_mc(f)) {
  if (branch) {
    if (!ambiguous()) throw std::invalid_argument("a branch is only meaningful when |c| = 2");
    if (*branch >= solutions_.solutions.size()) throw std::invalid_argument("no such branch");
    chosen_ = solutions_.solutions[*branch];
  } else if (!ambiguous()) {
    if (solutions_.solutions.empty())
      throw IntegrityError("no m(c) exists for family " + f.name());
    chosen_ = solutions_.solutions.front();
  }
  for (std::size_t m = 0; m < f.model->size(); ++m) degrees_.push_back(degree_polynomial(f, m));
  const RatPoly& special = degrees_.at(f.model->identity());
  a_ = special.valuation();
  A_ = special.degree();
}

std::size_t FamilyInvolution::mc() const {
  if (!chosen_) throw Error("ambiguous, supply branch");
  return *chosen_;
}

std::size_t FamilyInvolution::bang(std::size_t m) const { return family_.model->convolve(mc(), m); }

bool FamilyInvolution::verify_mc_unique(nlohmann::json* cex) const {
  const std::size_t expected = ambiguous() ? 2 : 1;
  const auto& sols = solutions_.solutions;
  bool ok = sols.size() == expected;
  std::string closed;
  if (ok && !ambiguous()) {
    const std::size_t c = closed_form_mc(family_);
    closed = family_.model->label(c);
    ok = sols.front() == c;
  }
  if (!ok && cex) {
    nlohmann::json found = nlohmann::json::array();
    for (std::size_t s : sols) found.push_back(family_.model->label(s));
    *cex = {{"solutions", found}, {"expected_count", expected}};
    if (!closed.empty()) (*cex)["closed_form"] = closed;
  }
  return ok;
}

bool FamilyInvolution::verify_sign_rule(nlohmann::json* cex) const {
  const auto& model = *family_.model;
  for (std::size_t k = 0; k < family_.size(); ++k) {
    const std::size_t me = family_.members[k].m;
    for (std::size_t m = 0; m < model.size(); ++m) {
      const Rat lhs = model.pairing(me, bang(m));
      const Rat rhs = sign_power(family_.b_prime(k)) * model.pairing(me, m);
      if (lhs != rhs) {
        if (cex)
          *cex = {{"E", family_.members[k].label}, {"m", model.label(m)}, {"lhs", lhs.to_string()},
                  {"rhs", rhs.to_string()}};
        return false;
      }
    }
  }
  return true;
}

bool FamilyInvolution::verify_degree_flip(nlohmann::json* cex) const {
  const auto& model = *family_.model;
  const Rat sign = sign_power(A_);
  for (std::size_t m = 0; m < model.size(); ++m) {
    const std::size_t mb = bang(m);
    // left side straight from the defining sum at m^!, right side by substitution
    const RatPoly lhs = degree_polynomial(family_, mb);
    const RatPoly rhs = degrees_[m].substitute_neg().scaled(sign);
    if (lhs != rhs) {
      if (cex)
        *cex = {{"m", model.label(m)}, {"m_bang", model.label(mb)}, {"lhs", lhs.to_string()},
                {"rhs", rhs.to_string()}};
      return false;
    }
    if (delta(mb) * delta(m) != (((a_ + A_) % 2 == 0) ? 1 : -1)) {
      if (cex) *cex = {{"m", model.label(m)}, {"delta_product", delta(mb) * delta(m)}, {"a", a_}, {"A", A_}};
      return false;
    }
  }
  return true;
}

bool FamilyInvolution::a_A_well_defined(nlohmann::json* cex) const {
  for (std::size_t m = 0; m < degrees_.size(); ++m) {
    const RatPoly& d = degrees_[m];
    if (d.is_zero() || d.valuation() != a_ || d.degree() != A_) {
      if (cex) *cex = {{"m", family_.model->label(m)}, {"degree", d.to_string()}, {"a", a_}, {"A", A_}};
      return false;
    }
  }
  return true;
}

bool FamilyInvolution::is_involution() const {
  for (std::size_t m = 0; m < family_.model->size(); ++m)
    if (bang(bang(m)) != m) return false;
  return true;
}

nlohmann::json FamilyInvolution::report() const {
  nlohmann::json j;
  j["family"] = family_.id;
  j["name"] = family_.name();
  j["gamma"] = family_.gamma();
  j["size"] = family_.size();
  j["a"] = a_;
  j["A"] = A_;
  if (chosen_) j["mc"] = family_.model->label(*chosen_);
  nlohmann::json checks;
  auto record = [&](const char* key, bool ok, const nlohmann::json& cex) {
    nlohmann::json c{{"pass", ok}};
    if (!ok) c["counterexample"] = cex;
    checks[key] = c;
  };
  nlohmann::json cex;
  const bool unique = verify_mc_unique(&cex);
  record("mc_unique", unique, cex);
  if (chosen_) {
    cex = nullptr;
    record("sign_rule", verify_sign_rule(&cex), cex);
    cex = nullptr;
    record("degree_flip", verify_degree_flip(&cex), cex);
  }
  cex = nullptr;
  record("aA", a_A_well_defined(&cex), cex);
  j["checks"] = checks;
  return j;
}

InvolutionTable::InvolutionTable(std::shared_ptr<const FamilyTable> families) : families_(std::move(families)) {
  for (const auto& f : families_->families()) {
    offset_.push_back(unipotents_.size());
    involutions_.emplace_back(f);
    const auto& inv = involutions_.back();
    for (std::size_t m = 0; m < f.model->size(); ++m) {
      UnipotentRep u;
      u.family = f.id;
      u.m = m;
      if (auto k = f.member_at(m)) u.irr = f.members[*k].irr;
      u.label = f.model->label(m);
      u.degree = inv.degree(m);
      u.a = inv.a();
      u.A = inv.A();
      u.delta = inv.delta(m);
      unipotents_.push_back(std::move(u));
    }
  }
}

std::size_t InvolutionTable::principal(std::size_t irr) const {
  const std::size_t id = families_->family_of(irr);
  return index(id, families_->family(id).members.at(families_->position(irr)).m);
}

std::size_t InvolutionTable::bang(std::size_t xi) const {
  const auto& u = unipotents_.at(xi);
  return index(u.family, involutions_.at(u.family).bang(u.m));
}

nlohmann::json InvolutionTable::report() const {
  nlohmann::json j;
  j["type"] = weyl().name();
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& inv : involutions_) fs.push_back(inv.report());
  j["families"] = fs;
  return j;
}

bool InvolutionTable::all_pass() const {
  for (const auto& inv : involutions_) {
    if (!inv.verify_mc_unique() || !inv.verify_sign_rule() || !inv.verify_degree_flip() || !inv.a_A_well_defined())
      return false;
  }
  return true;
}

}  // namespace uflip
