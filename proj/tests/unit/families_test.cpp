#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "uflip/error.hpp"
#include "uflip/families.hpp"

namespace uflip {
namespace {

TEST(Families, B2Shape) {
  auto t = build_families("B", 2);
  ASSERT_EQ(t->families().size(), 3u);
  std::vector<std::size_t> sizes, models;
  for (const auto& f : t->families()) {
    sizes.push_back(f.size());
    models.push_back(f.model->size());
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_EQ(models, (std::vector<std::size_t>{1, 4, 1}));
  EXPECT_EQ(t->unipotent_count(), 6u);
  const Family& f = t->family(1);
  EXPECT_EQ(f.special().label, "1.1");
  EXPECT_EQ(f.gamma(), "Z/2");
  EXPECT_EQ(f.classical->special_symbol(), Symbol({0, 2}, {1}));
}

TEST(Families, UnipotentCounts) {
  const std::vector<std::tuple<std::string, int, std::size_t>> expected = {
      {"B", 2, 6}, {"B", 3, 12}, {"C", 3, 12}, {"D", 4, 14}, {"B", 6, 86}, {"D", 6, 42}, {"G", 2, 10}, {"F", 4, 37}};
  for (const auto& [type, rank, count] : expected)
    EXPECT_EQ(testing::involutions(type, rank)->families().unipotent_count(), count) << type << rank;
}

TEST(Families, EveryIrreducibleIsPlacedOnce) {
  for (const auto& [type, rank] : std::vector<std::pair<std::string, int>>{{"B", 5}, {"D", 6}, {"G", 2}, {"F", 4}}) {
    const auto& t = testing::involutions(type, rank)->families();
    std::vector<int> seen(t.weyl().irreducibles().size());
    for (const auto& f : t.families())
      for (std::size_t k = 0; k < f.size(); ++k) {
        ++seen.at(f.members[k].irr);
        EXPECT_EQ(t.family_of(f.members[k].irr), f.id);
        EXPECT_EQ(t.position(f.members[k].irr), k);
        EXPECT_GE(f.b_prime(k), 0);
      }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(Families, ExceptionalFamilies) {
  const auto& g2 = testing::involutions("G", 2)->families();
  int s3 = 0;
  for (const auto& f : g2.families()) {
    if (f.gamma() == "S3") {
      ++s3;
      EXPECT_EQ(f.size(), 4u);
      EXPECT_EQ(f.special().label, "phi2,1");
    } else {
      EXPECT_EQ(f.size(), 1u);
    }
  }
  EXPECT_EQ(s3, 1);
  const auto& f4 = testing::involutions("F", 4)->families();
  int s4 = 0, s2 = 0;
  for (const auto& f : f4.families()) {
    s4 += f.gamma() == "S4";
    s2 += f.gamma() == "S2";
    if (f.gamma() == "S4") {
      EXPECT_EQ(f.size(), 11u);
    }
  }
  EXPECT_EQ(s4, 1);
  EXPECT_EQ(s2, 2);
  EXPECT_EQ(f4.families().size(), 11u);
}

TEST(Families, EmbeddedDataAgreesWithComputedTables) {
  EXPECT_TRUE(validate_exceptional_data(*WeylGroup::build("G", 2)).empty());
  EXPECT_TRUE(validate_exceptional_data(*WeylGroup::build("F", 4)).empty());
  EXPECT_EQ(exceptional_data().at("schema"), "uflip exceptional families 1");
}

TEST(Families, OrderIsStable) {
  auto a = build_families("D", 6);
  auto b = build_families("D", 6);
  EXPECT_EQ(families_json(*a).dump(), families_json(*b).dump());
  for (std::size_t i = 1; i < a->families().size(); ++i)
    EXPECT_LE(a->family(i - 1).special().b, a->family(i).special().b);
}

TEST(Families, SymmetricGroupModelsAreShared) {
  EXPECT_EQ(symmetric_mgamma(3), symmetric_mgamma(3));
  EXPECT_EQ(symmetric_mgamma(3)->name(), "S3");
  EXPECT_EQ(symmetric_mgamma(1)->size(), 1u);
}

TEST(Families, Json) {
  const auto j = to_json(build_families("B", 2)->family(1));
  EXPECT_EQ(j.at("members").size(), 3u);
}

}  // namespace
}  // namespace uflip
