// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uflip/dl_expansion.hpp"
#include "uflip/families.hpp"
#include "uflip/hecke.hpp"
#include "uflip/involution.hpp"
#include "uflip/mgamma.hpp"
#include "uflip/weyl.hpp"

namespace {

using namespace uflip;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using TypeRank = std::pair<std::string, int>;

std::vector<TypeRank> sweep_types() {
  std::vector<TypeRank> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"B", n});
  for (int n = 2; n <= 6; ++n) out.push_back({"C", n});
  out.push_back({"D", 4});
  out.push_back({"D", 6});
  out.push_back({"G", 2});
  out.push_back({"F", 4});
  return out;
}

std::string name(const TypeRank& t) { return t.first + std::to_string(t.second); }

std::map<TypeRank, std::shared_ptr<const InvolutionTable>>& cache() {
  static std::map<TypeRank, std::shared_ptr<const InvolutionTable>> c;
  return c;
}

const InvolutionTable& table(const TypeRank& t) {
  auto& slot = cache()[t];
  if (!slot) slot = std::make_shared<InvolutionTable>(build_families(t.first, t.second));
  return *slot;
}

Outcome b2_ground_truth() {
  Outcome o;
  // built from scratch so the time limit covers the whole pipeline
  InvolutionTable t(build_families("B", 2));
  const RatPoly u = RatPoly::u();
  const RatPoly target = (u * u * u + u) * Rat(1, 2);
  const auto& fi = t.family(1);
  if (fi.family().size() != 3) o.fail("family 1 does not have three members");
  std::vector<std::size_t> hits;
  for (std::size_t m = 0; m < fi.family().model->size(); ++m)
    if (fi.degree(m) == target) hits.push_back(m);
  if (hits.size() != 2) o.fail(std::to_string(hits.size()) + " representations with D = u(u^2+1)/2");
  else if (fi.bang(hits[0]) != hits[1] || fi.bang(hits[1]) != hits[0]) o.fail("the involution does not swap them");
  int total = 0;
  for (const auto& x : t.unipotents()) total += x.degree == target;
  if (total != 2) o.fail("degree u(u^2+1)/2 occurs " + std::to_string(total) + " times in B2");
  return o;
}

Outcome mc_sweep() {
  Outcome o;
  for (const auto& tr : sweep_types()) {
    const auto& t = table(tr);
    for (const auto& f : t.families().families()) {
      const auto sols = solve_mc(f);
      if (sols.solutions.size() != 1) {
        o.fail(name(tr) + " " + f.name() + ": " + std::to_string(sols.solutions.size()) + " solutions");
        continue;
      }
      if (sols.solutions.front() != closed_form_mc(f)) o.fail(name(tr) + " " + f.name() + ": closed form differs");
    }
  }
  return o;
}

Outcome sign_rule_and_degree_flip() {
  Outcome o;
  for (const auto& tr : sweep_types()) {
    const auto& t = table(tr);
    for (std::size_t id = 0; id < t.families().families().size(); ++id) {
      const auto& fi = t.family(id);
      nlohmann::json cex;
      if (!fi.verify_sign_rule(&cex)) o.fail(name(tr) + " " + fi.family().name() + " sign rule: " + cex.dump());
      if (!fi.verify_degree_flip(&cex)) o.fail(name(tr) + " " + fi.family().name() + " degrees: " + cex.dump());
      if (!fi.a_A_well_defined(&cex)) o.fail(name(tr) + " " + fi.family().name() + " a/A: " + cex.dump());
    }
  }
  return o;
}

Outcome w0_duality_sweep() {
  Outcome o;
  for (const TypeRank& tr : std::vector<TypeRank>{{"B", 3}, {"C", 3}, {"D", 4}, {"G", 2}, {"F", 4}}) {
    nlohmann::json cex;
    if (!verify_w0_duality(table(tr), &cex)) o.fail(name(tr) + ": " + cex.dump());
  }
  return o;
}

Outcome fake_degrees() {
  Outcome o;
  for (const auto& tr : sweep_types()) {
    auto w = WeylGroup::build(tr.first, tr.second);
    nlohmann::json cex;
    if (!verify_fake_degrees(*w, &cex)) o.fail(name(tr) + ": " + cex.dump());
    for (const auto& e : w->irreducibles())
      if (e.fake_degree.substitute_neg() != e.fake_degree.scaled(Rat(e.b % 2 ? -1 : 1)))
        o.fail(name(tr) + " parity of " + e.label);
    RatPoly sum;
    for (const auto& e : w->irreducibles()) sum += e.fake_degree * Rat(e.dim);
    if (sum != w->poincare_polynomial()) o.fail(name(tr) + ": sum of dim(E) FD_E is not the Poincare polynomial");
  }
  return o;
}

bool squares_to_identity(const FourierModel& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      Rat s;
      for (std::size_t k = 0; k < m.size(); ++k) s += m.pairing(i, k) * m.pairing(k, j);
      if (s != Rat(i == j ? 1 : 0)) return false;
    }
  return true;
}

Outcome fourier_involutivity() {
  Outcome o;
  int models = 0;
  for (const auto& tr : sweep_types()) {
    if (tr.first == "G" || tr.first == "F") continue;
    for (const auto& f : table(tr).families().families()) {
      if (f.classical->d() > 3) continue;
      ++models;
      if (!squares_to_identity(*f.model)) o.fail(name(tr) + " " + f.name() + ": S^2 != I");
    }
  }
  // every d up to 3 in both kinds, including sizes beyond the ranks above
  for (int d = 0; d <= 3; ++d) {
    ClassicalFamily bc;
    for (int i = 0; i <= 2 * d; ++i) (i % 2 == 0 ? bc.A : bc.B).push_back(i);
    ++models;
    if (!squares_to_identity(SymbolFourierModel(bc))) o.fail("B/C d = " + std::to_string(d) + ": S^2 != I");
    if (d == 0) continue;
    ClassicalFamily dd;
    dd.kind = FamilyKind::D;
    for (int i = 0; i < d; ++i) {
      dd.B.push_back(2 * i);
      dd.A.push_back(2 * i + 1);
    }
    if (d % 2) ++dd.A.back();  // the entries of Z1 must have an even sum
    ++models;
    if (!squares_to_identity(SymbolFourierModel(dd))) o.fail("D d = " + std::to_string(d) + ": S^2 != I");
  }
  const std::vector<std::pair<std::string, PermGroup>> groups = {{"Z/2", PermGroup::symmetric(2)},
                                                                 {"(Z/2)^2", PermGroup::elementary_abelian_2(2)},
                                                                 {"S3", PermGroup::symmetric(3)},
                                                                 {"S4", PermGroup::symmetric(4)},
                                                                 {"S5", PermGroup::symmetric(5)}};
  for (const auto& [label, g] : groups) {
    MGamma m(g);
    if (!m.verify_ring_hom()) o.fail("ring homomorphism fails for " + label);
  }
  if (models < 10) o.fail("too few models checked");
  return o;
}

Outcome hecke_spectrum() {
  Outcome o;
  for (const TypeRank& tr : std::vector<TypeRank>{{"B", 2}, {"B", 3}, {"G", 2}}) {
    auto h = HeckeAlgebra::build(tr.first, tr.second);
    nlohmann::json cex;
    if (!h.verify_Tw0_central(&cex)) o.fail(name(tr) + " T_w0 not central: " + cex.dump());
    const auto c = verify_central_scalar(h, table(tr), Rat(3));
    if (!c.pass) o.fail(name(tr) + " spectrum: " + to_json(c).dump());
  }
  return o;
}

Outcome w0_sums_sweep() {
  Outcome o;
  for (const auto& tr : sweep_types()) {
    nlohmann::json cex;
    if (!verify_w0_sums(table(tr), &cex)) o.fail(name(tr) + ": " + cex.dump());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"B2 ground truth: two degrees u(u^2+1)/2, swapped", 1, b2_ground_truth},
      {"m(c) unique and equal to the closed form (B/C n<=6, D4, D6, G2, F4)", 60, mc_sweep},
      {"sign rule for m(c) * m and degrees under u -> -u, exact", 0, sign_rule_and_degree_flip},
      {"H*(X_w) against H*(X_{w w0}) for B3, C3, D4, G2, F4", 120, w0_duality_sweep},
      {"fake degree parity and Poincare sum, all supported types", 0, fake_degrees},
      {"Fourier matrices square to 1 (d<=3), ring homomorphism for Z/2, (Z/2)^2, S3, S4, S5", 0,
       fourier_involutivity},
      {"T_w0 central with minimal polynomial from family data at v0 = 3 (B2, B3, G2)", 60, hecke_spectrum},
      {"w0 sums agree with H*(X_w0), all supported types", 0, w0_sums_sweep},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(criteria[i].limit_seconds) + " s");
    std::printf("%s %zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title, secs,
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
