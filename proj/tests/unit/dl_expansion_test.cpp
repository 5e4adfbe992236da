#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "uflip/coxeter.hpp"
#include "uflip/dl_expansion.hpp"
#include "uflip/error.hpp"
#include "uflip/hecke.hpp"

namespace uflip {
namespace {

using testing::involutions;
using testing::member_m;

std::size_t xi_of(const InvolutionTable& t, std::size_t family, const std::string& model_label) {
  return t.index(family, testing::element(*t.family(family).family().model, model_label));
}

TEST(Expansion, MultiplicitiesOfPrincipalSeries) {
  auto t = involutions("B", 2);
  const auto& w = t->weyl();
  const std::size_t triv = w.trivial();
  EXPECT_EQ(multiplicity_R_E(*t, t->principal(triv), triv), Rat(1));
  const std::size_t special = w.find_irreducible("1.1");
  EXPECT_EQ(multiplicity_R_E(*t, t->principal(special), special), Rat(1, 2));
  EXPECT_EQ(multiplicity_R_E(*t, t->principal(triv), special), Rat(0));
  EXPECT_EQ(multiplicity_R_E(*t, t->principal(special), triv), Rat(0));
}

TEST(Expansion, IdentityGivesThePrincipalSeries) {
  for (const auto& [type, rank] : std::vector<std::pair<std::string, int>>{{"B", 2}, {"D", 4}, {"G", 2}}) {
    auto t = involutions(type, rank);
    const auto x = hstar_expansion(*t, t->weyl().identity_class());
    VirtualUnip expected;
    for (std::size_t e = 0; e < t->weyl().irreducibles().size(); ++e)
      expected.add(t->principal(e), Rat(t->weyl().irreducibles()[e].dim));
    EXPECT_EQ(x, expected) << type << rank;
  }
}

TEST(Expansion, B2CoxeterElement) {
  auto t = involutions("B", 2);
  const auto x = hstar_expansion_word(*t, {1, 2});
  VirtualUnip expected;
  expected.add(t->principal(t->weyl().trivial()), Rat(1));
  expected.add(t->principal(t->weyl().sign()), Rat(1));
  expected.add(xi_of(*t, 1, "(|0,1,2)"), Rat(1));
  expected.add(t->principal(t->weyl().find_irreducible("1.1")), Rat(-1));
  EXPECT_EQ(x, expected);
  EXPECT_EQ(hstar_expansion_word(*t, {2, 1}), x);
}

// For every w in W(B2), enumerated as words, the expansion depends only on the class.
TEST(Expansion, B2AllElements) {
  auto t = involutions("B", 2);
  auto cox = std::make_shared<CoxeterGroup>(cartan_matrix("B", 2));
  ASSERT_EQ(cox->order(), 8u);
  for (std::size_t w = 0; w < cox->order(); ++w) {
    std::vector<int> word = cox->reduced_word(w);
    for (int& s : word) ++s;
    const auto x = hstar_expansion_word(*t, word);
    Rat total_degree_at_one;
    for (const auto& [xi, c] : x.terms()) total_degree_at_one += c * t->unipotents()[xi].degree.evaluate(Rat(1));
    // the Lefschetz number at q = 1 is the number of fixed points of w on the flag variety
    EXPECT_EQ(total_degree_at_one, Rat(w == cox->identity() ? 8 : 0));
  }
}

TEST(Expansion, CohomologyUnderLongestElement) {
  for (const auto& [type, rank] :
       std::vector<std::pair<std::string, int>>{{"B", 2}, {"B", 3}, {"C", 3}, {"D", 4}, {"G", 2}, {"F", 4}}) {
    nlohmann::json cex;
    EXPECT_TRUE(verify_w0_duality(*involutions(type, rank), &cex)) << type << rank << cex.dump();
  }
}

TEST(Expansion, LongestElementSums) {
  auto t = involutions("B", 2);
  const auto s = w0_sums(*t);
  EXPECT_EQ(s.ungraded.terms().size(), 5u);
  EXPECT_EQ(s.ungraded[xi_of(*t, 1, "(|0,1,2)")], Rat(-2));
  EXPECT_EQ(s.ungraded[t->bang(t->principal(t->weyl().trivial()))], Rat(1));
  EXPECT_EQ(s.ungraded, hstar_expansion(*t, t->weyl().w0_class()));
  EXPECT_EQ(total(s.graded), s.ungraded);
  for (const auto& [type, rank] : std::vector<std::pair<std::string, int>>{
           {"B", 3}, {"B", 6}, {"C", 4}, {"D", 4}, {"D", 6}, {"G", 2}, {"F", 4}}) {
    nlohmann::json cex;
    EXPECT_TRUE(verify_w0_sums(*involutions(type, rank), &cex)) << type << rank << cex.dump();
  }
}

TEST(Expansion, WeightShiftAtIdentity) {
  for (const auto& [type, rank] : std::vector<std::pair<std::string, int>>{{"B", 2}, {"B", 4}, {"G", 2}, {"F", 4}}) {
    auto t = involutions(type, rank);
    const auto& w = t->weyl();
    std::vector<RatPoly> at_one, at_w0, zero(w.irreducibles().size());
    for (std::size_t e = 0; e < w.irreducibles().size(); ++e) {
      const auto& fi = t->family(t->families().family_of(e));
      const auto& irr = w.irreducibles()[e];
      at_one.emplace_back(Rat(irr.dim));
      at_w0.push_back(RatPoly::monomial(2 * w.nu() - fi.a() - fi.A(), Rat(irr.b % 2 ? -irr.dim : irr.dim)));
    }
    EXPECT_TRUE(verify_weight_shift(*t, at_one, at_w0));
    EXPECT_EQ(weight_shift_expansion(*t, at_one, at_w0), w0_sums(*t).graded);
    EXPECT_TRUE(weight_shift_expansion(*t, zero, zero).empty());
  }
}

// Exact Hecke traces on the dihedral types: summing the graded expansion over k recovers
// H*(X_w); the scalar relation needed to shift weights fails as soon as w != 1.
TEST(Expansion, WeightShiftAgainstHeckeTraces) {
  for (const std::string type : {"B", "G"}) {
    auto t = involutions(type, 2);
    const auto& w = t->weyl();
    auto cox = w.coxeter();
    const auto traces = dihedral_hecke_traces(w);
    for (std::size_t x = 0; x < cox->order(); ++x) {
      std::vector<int> word = cox->reduced_word(x);
      for (int& s : word) ++s;
      const auto graded = graded_expansion(*t, traces[x]);
      EXPECT_EQ(total(graded), hstar_expansion_word(*t, word));
      const std::size_t xw0 = cox->multiply(x, cox->longest());
      if (x == cox->identity()) {
        EXPECT_TRUE(verify_weight_shift(*t, traces[x], traces[xw0]));
      } else {
        EXPECT_THROW(weight_shift_expansion(*t, traces[x], traces[xw0]), ScalarRelationError) << type << " " << x;
      }
    }
  }
}

TEST(Expansion, Json) {
  auto t = involutions("B", 2);
  const auto j = expansion_json(*t, "w0", hstar_expansion(*t, t->weyl().w0_class()));
  EXPECT_EQ(j.at("w"), "w0");
  EXPECT_EQ(j.at("coefficients").size(), 5u);
  EXPECT_FALSE(graded_json(*t, w0_sums(*t).graded).empty());
}

}  // namespace
}  // namespace uflip
