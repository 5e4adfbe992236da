#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "uflip/error.hpp"
#include "uflip/involution.hpp"
#include "uflip/mgamma.hpp"

namespace uflip {
namespace {

using testing::element;
using testing::involutions;
using testing::member_m;
using testing::u;

const std::vector<std::pair<std::string, int>> kSweep = {{"B", 1}, {"B", 2}, {"B", 3}, {"B", 4}, {"B", 5},
                                                         {"B", 6}, {"C", 3}, {"C", 6}, {"D", 4}, {"D", 6},
                                                         {"G", 2}, {"F", 4}};

// Two members on Z/2 at (1,1) and (g,eps); the only shape where m(c) is not unique.
Family two_member_family() {
  Family f;
  f.mgamma = symmetric_mgamma(2);
  f.model = std::make_shared<GroupFourierModel>(f.mgamma);
  FamilyMember e1, e2;
  e1.label = "E1";
  e1.dim = 2;
  e1.b = 1;
  e1.fake_degree = u() + pow(u(), 3);
  e1.m = f.model->identity();
  e2.label = "E2";
  e2.dim = 2;
  e2.b = 2;
  e2.fake_degree = pow(u(), 2) + pow(u(), 4);
  e2.m = element(*f.model, "((1,2), [1,-1])");
  f.members = {e1, e2};
  return f;
}

TEST(Involution, B2Family) {
  auto t = involutions("B", 2);
  const auto& fi = t->family(1);
  const Family& f = fi.family();
  const auto& model = *f.model;
  EXPECT_EQ(model.label(fi.mc()), "(|0,1,2)");
  EXPECT_EQ(fi.bang(model.identity()), fi.mc());
  EXPECT_EQ(model.label(fi.bang(member_m(f, "11."))), "(0,1|2)");
  EXPECT_EQ(fi.a(), 1);
  EXPECT_EQ(fi.A(), 3);

  const RatPoly half_cubic = (pow(u(), 3) + u()) * Rat(1, 2);
  const RatPoly plus = u() * pow(u() + RatPoly(1), 2) * Rat(1, 2);
  const RatPoly minus = u() * pow(u() - RatPoly(1), 2) * Rat(1, 2);
  EXPECT_EQ(fi.degree(member_m(f, "1.1")), plus);
  EXPECT_EQ(fi.degree(fi.mc()), minus);
  EXPECT_EQ(fi.degree(member_m(f, "11.")), half_cubic);
  EXPECT_EQ(fi.degree(member_m(f, ".2")), half_cubic);
  // exactly two unipotent representations of degree u(u^2+1)/2, and they are swapped
  std::vector<std::size_t> hits;
  for (std::size_t m = 0; m < model.size(); ++m)
    if (fi.degree(m) == half_cubic) hits.push_back(m);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(fi.bang(hits[0]), hits[1]);
  EXPECT_EQ(fi.bang(member_m(f, "1.1")), fi.mc());
}

TEST(Involution, SingletonFamilies) {
  auto t = involutions("B", 3);
  const auto& triv = t->family(t->families().family_of(t->weyl().trivial()));
  EXPECT_EQ(triv.degree(0), RatPoly(1));
  EXPECT_EQ(triv.bang(0), 0u);
  EXPECT_EQ(solve_mc(triv.family()).solutions, std::vector<std::size_t>{triv.family().model->identity()});
  EXPECT_TRUE(triv.verify_sign_rule());
}

TEST(Involution, G2UsesTheSignCharacter) {
  auto t = involutions("G", 2);
  for (std::size_t id = 0; id < t->families().families().size(); ++id) {
    const auto& fi = t->family(id);
    if (fi.family().gamma() != "S3") continue;
    EXPECT_EQ(fi.family().model->label(fi.mc()), "((), [1,-1,1])");
    EXPECT_EQ(solve_mc(fi.family()).solutions.size(), 1u);
  }
}

// Exhaustive search and closed form agree on every family, and every identity holds.
TEST(Involution, SweepOfAllSupportedTypes) {
  for (const auto& [type, rank] : kSweep) {
    auto t = involutions(type, rank);
    for (std::size_t id = 0; id < t->families().families().size(); ++id) {
      const auto& fi = t->family(id);
      nlohmann::json cex;
      EXPECT_TRUE(fi.verify_mc_unique(&cex)) << type << rank << " " << fi.family().name() << cex.dump();
      EXPECT_TRUE(fi.verify_sign_rule(&cex)) << type << rank << " " << fi.family().name() << cex.dump();
      EXPECT_TRUE(fi.verify_degree_flip(&cex)) << type << rank << " " << fi.family().name() << cex.dump();
      EXPECT_TRUE(fi.a_A_well_defined(&cex)) << type << rank << " " << fi.family().name() << cex.dump();
      EXPECT_TRUE(fi.is_involution());
      EXPECT_EQ(fi.mc(), closed_form_mc(fi.family()));
      EXPECT_EQ(fi.a(), fi.family().special().b);
    }
    EXPECT_TRUE(t->all_pass());
  }
}

// Degrees are honest polynomials: integer values at prime powers and D(1) matches the family.
TEST(Involution, DegreesTakeIntegerValues) {
  for (const auto& [type, rank] : kSweep) {
    auto t = involutions(type, rank);
    for (const auto& x : t->unipotents())
      for (long q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_TRUE(x.degree.evaluate(Rat(q)).is_integer()) << x.label;
  }
}

TEST(Involution, F4LargeFamilyHasOneAAPair) {
  auto t = involutions("F", 4);
  for (std::size_t id = 0; id < t->families().families().size(); ++id) {
    const auto& fi = t->family(id);
    if (fi.family().gamma() != "S4") continue;
    EXPECT_EQ(fi.a(), 4);
    EXPECT_EQ(fi.A(), 20);
    EXPECT_EQ(fi.family().model->size(), 21u);
  }
}

TEST(Involution, TableIndexing) {
  auto t = involutions("B", 2);
  EXPECT_EQ(t->unipotents().size(), 6u);
  for (std::size_t xi = 0; xi < t->unipotents().size(); ++xi) {
    const auto& x = t->unipotents()[xi];
    EXPECT_EQ(t->index(x.family, x.m), xi);
    EXPECT_EQ(t->bang(t->bang(xi)), xi);
  }
  for (std::size_t e = 0; e < t->weyl().irreducibles().size(); ++e)
    EXPECT_EQ(t->unipotents()[t->principal(e)].irr, std::optional<std::size_t>(e));
}

TEST(Involution, TwoMemberFamilyHasTwoBranches) {
  const Family f = two_member_family();
  const auto sols = solve_mc(f);
  ASSERT_EQ(sols.solutions.size(), 2u);
  EXPECT_THROW(closed_form_mc(f), std::invalid_argument);

  FamilyInvolution open(f);
  EXPECT_TRUE(open.ambiguous());
  EXPECT_THROW(open.mc(), Error);
  EXPECT_THROW(open.bang(0), Error);
  EXPECT_TRUE(open.verify_mc_unique());

  const std::size_t outside = element(*f.model, "((1,2), [1,1])");
  EXPECT_EQ(delta(f, f.model->identity()), 1);
  EXPECT_EQ(delta(f, outside), -1);
  for (std::size_t branch : {0u, 1u}) {
    FamilyInvolution fi(f, branch);
    EXPECT_EQ(fi.mc(), sols.solutions[branch]);
    EXPECT_TRUE(fi.is_involution());
    EXPECT_TRUE(fi.verify_sign_rule());
  }
  EXPECT_THROW(FamilyInvolution(f, 2), std::invalid_argument);
  EXPECT_THROW(FamilyInvolution(involutions("B", 2)->family(1).family(), 0), std::invalid_argument);
}

TEST(Involution, Report) {
  const auto j = involutions("B", 2)->report();
  EXPECT_EQ(j.dump(), involutions("B", 2)->report().dump());
  EXPECT_NE(j.dump().find("degree_flip"), std::string::npos);
}

}  // namespace
}  // namespace uflip
