#include "uflip/dl_expansion.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uflip/error.hpp"

namespace uflip {

void VirtualUnip::add(std::size_t xi, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(xi);
  if (it == terms_.end()) {
    terms_.emplace(xi, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rat VirtualUnip::operator[](std::size_t xi) const {
  auto it = terms_.find(xi);
  return it == terms_.end() ? Rat(0) : it->second;
}

namespace {

Rat sign_power(int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

std::string unipotent_name(const InvolutionTable& t, std::size_t xi) {
  const auto& u = t.unipotents().at(xi);
  return std::to_string(u.family) + ":" + u.label;
}

// v^k coefficients of a polynomial in v, scaled
void add_graded(GradedVirtualUnip& g, std::size_t xi, const RatPoly& p, const Rat& scale) {
  for (const auto& [k, c] : p.terms()) g[k].add(xi, c * scale);
}

void drop_empty(GradedVirtualUnip& g) {
  for (auto it = g.begin(); it != g.end();) it = it->second.is_zero() ? g.erase(it) : std::next(it);
}

}  // namespace

Rat multiplicity_R_E(const InvolutionTable& t, std::size_t xi, std::size_t irr) {
  const auto& u = t.unipotents().at(xi);
  if (t.families().family_of(irr) != u.family) return Rat(0);
  const Family& f = t.families().family(u.family);
  const std::size_t me = f.members.at(t.families().position(irr)).m;
  return Rat(u.delta) * f.model->pairing(me, u.m);
}

VirtualUnip hstar_expansion(const InvolutionTable& t, std::size_t w_class) {
  const WeylGroup& w = t.weyl();
  VirtualUnip out;
  for (std::size_t xi = 0; xi < t.unipotents().size(); ++xi) {
    const auto& u = t.unipotents()[xi];
    Rat c;
    for (const auto& e : t.families().family(u.family).members)
      c += Rat(w.character_value(e.irr, w_class)) * multiplicity_R_E(t, xi, e.irr);
    out.add(xi, c);
  }
  return out;
}

VirtualUnip hstar_expansion_word(const InvolutionTable& t, const std::vector<int>& word) {
  return hstar_expansion(t, t.weyl().class_of_word(word));
}

bool verify_w0_duality(const InvolutionTable& t, nlohmann::json* cex) {
  const WeylGroup& w = t.weyl();
  for (std::size_t c = 0; c < w.classes().size(); ++c) {
    const VirtualUnip x = hstar_expansion(t, c);
    const VirtualUnip y = hstar_expansion(t, w.classes()[c].times_w0);
    for (std::size_t xi = 0; xi < t.unipotents().size(); ++xi) {
      const std::size_t xb = t.bang(xi);
      const Rat lhs = x[xi];
      const Rat rhs = sign_power(t.unipotents()[xi].A) * y[xb];
      if (lhs != rhs) {
        if (cex)
          *cex = {{"class", w.classes()[c].label}, {"xi", unipotent_name(t, xi)}, {"xi_bang", unipotent_name(t, xb)},
                  {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
        return false;
      }
    }
  }
  return true;
}

GradedVirtualUnip graded_expansion(const InvolutionTable& t, const std::vector<RatPoly>& traces) {
  if (traces.size() != t.weyl().irreducibles().size()) throw std::invalid_argument("one trace per irreducible is needed");
  GradedVirtualUnip g;
  for (std::size_t xi = 0; xi < t.unipotents().size(); ++xi) {
    const auto& u = t.unipotents()[xi];
    for (const auto& e : t.families().family(u.family).members)
      add_graded(g, xi, traces[e.irr], multiplicity_R_E(t, xi, e.irr));
  }
  drop_empty(g);
  return g;
}

GradedVirtualUnip weight_shift_expansion(const InvolutionTable& t, const std::vector<RatPoly>& traces_w,
                                         const std::vector<RatPoly>& traces_ww0) {
  const WeylGroup& w = t.weyl();
  if (traces_w.size() != w.irreducibles().size() || traces_ww0.size() != w.irreducibles().size())
    throw std::invalid_argument("one trace per irreducible is needed");
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i) {
    const auto& inv = t.family(t.families().family_of(i));
    const int shift = 2 * w.nu() - inv.a() - inv.A();
    const RatPoly predicted = traces_w[i].shifted(shift).scaled(sign_power(w.irreducibles()[i].b));
    if (predicted != traces_ww0[i])
      throw ScalarRelationError("T_w0 scalar relation fails for " + w.irreducibles()[i].label + ": expected " +
                                    predicted.to_string("v") + ", got " + traces_ww0[i].to_string("v"),
                                w.irreducibles()[i].label);
  }
  const GradedVirtualUnip at_w = graded_expansion(t, traces_w);
  GradedVirtualUnip out;
  for (const auto& [k, x] : at_w)
    for (const auto& [xi, c] : x.terms()) {
      const auto& u = t.unipotents()[xi];
      out[k + 2 * w.nu() - u.a - u.A].add(t.bang(xi), sign_power(u.A) * c);
    }
  drop_empty(out);
  return out;
}

bool verify_weight_shift(const InvolutionTable& t, const std::vector<RatPoly>& traces_w,
                         const std::vector<RatPoly>& traces_ww0) {
  return graded_expansion(t, traces_ww0) == weight_shift_expansion(t, traces_w, traces_ww0);
}

VirtualUnip total(const GradedVirtualUnip& g) {
  VirtualUnip out;
  for (const auto& [k, x] : g)
    for (const auto& [xi, c] : x.terms()) out.add(xi, c);
  return out;
}

std::size_t principal_series_member(const InvolutionTable& t, std::size_t irr) {
  const std::size_t xi = t.principal(irr);
  if (multiplicity_R_E(t, xi, irr).is_zero())
    throw IntegrityError("xi_E for " + t.weyl().irreducibles().at(irr).label + " does not meet R_E");
  return xi;
}

W0Sums w0_sums(const InvolutionTable& t) {
  const WeylGroup& w = t.weyl();
  W0Sums s;
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i) {
    const std::size_t xi = principal_series_member(t, i);
    const auto& u = t.unipotents()[xi];
    const Rat c = sign_power(u.A) * Rat(w.irreducibles()[i].dim);
    s.ungraded.add(t.bang(xi), c);
    s.graded[2 * w.nu() - u.a - u.A].add(t.bang(xi), c);
  }
  drop_empty(s.graded);
  return s;
}

bool verify_w0_sums(const InvolutionTable& t, nlohmann::json* cex) {
  const WeylGroup& w = t.weyl();
  const W0Sums s = w0_sums(t);
  const VirtualUnip direct = hstar_expansion(t, w.w0_class());
  // H*(X_1) must be sum_E dim(E) xi_E for the embedding to make sense
  const VirtualUnip at_one = hstar_expansion(t, w.identity_class());
  VirtualUnip expected_one;
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i)
    expected_one.add(principal_series_member(t, i), Rat(w.irreducibles()[i].dim));
  auto report = [&](const char* what, const VirtualUnip& a, const VirtualUnip& b) {
    if (cex) *cex = {{"check", what}, {"lhs", expansion_json(t, "", a)}, {"rhs", expansion_json(t, "", b)}};
    return false;
  };
  if (at_one != expected_one) return report("H*(X_1)", at_one, expected_one);
  if (s.ungraded != direct) return report("w0", s.ungraded, direct);
  if (total(s.graded) != s.ungraded) return report("graded total", total(s.graded), s.ungraded);
  return true;
}

nlohmann::json expansion_json(const InvolutionTable& t, const std::string& w_label, const VirtualUnip& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [xi, c] : x.terms()) coeffs.push_back({unipotent_name(t, xi), c.to_string()});
  nlohmann::json j;
  if (!w_label.empty()) j["w"] = w_label;
  j["coefficients"] = coeffs;
  return j;
}

nlohmann::json graded_json(const InvolutionTable& t, const GradedVirtualUnip& g) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, x] : g) j.push_back({{"k", k}, {"coefficients", expansion_json(t, "", x)["coefficients"]}});
  return j;
}

}  // namespace uflip
