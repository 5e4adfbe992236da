#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "uflip/perm_group.hpp"

namespace uflip {
namespace {

std::vector<std::size_t> class_sizes(const PermGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : g.classes()) s.push_back(c.size());
  return s;
}

std::vector<std::int64_t> degrees(const PermGroup& g) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < g.character_table().num_irreducibles(); ++i) d.push_back(g.character_table().degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

// sum_g chi(g) conj(psi(g)) = |G| delta, checked in Z[zeta_N]
void expect_orthonormal(const PermGroup& g) {
  const auto& t = g.character_table();
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
    for (std::size_t j = 0; j < t.num_irreducibles(); ++j) {
      Cyclotomic s(t.cyclotomic_order);
      for (std::size_t c = 0; c < g.classes().size(); ++c)
        s += t.rows[i][c] * t.rows[j][c].conjugate() * static_cast<std::int64_t>(t.class_sizes[c]);
      EXPECT_EQ(s.as_integer(), std::optional<std::int64_t>(i == j ? g.order() : 0)) << i << "," << j;
    }
}

TEST(PermGroup, ConjugacyClasses) {
  auto s3 = class_sizes(PermGroup::symmetric(3));
  std::sort(s3.begin(), s3.end());
  EXPECT_EQ(s3, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(PermGroup::trivial().classes().size(), 1u);
  EXPECT_EQ(PermGroup::symmetric(5).classes().size(), 7u);
  EXPECT_EQ(PermGroup::symmetric(3).classes().front().size(), 1u);
}

TEST(PermGroup, Centralizers) {
  const PermGroup s5 = PermGroup::symmetric(5);
  EXPECT_EQ(s5.centralizer(identity_perm(5)).order(), 120u);
  EXPECT_EQ(s5.centralizer(parse_cycles("(1,2)", 5)).order(), 12u);
  const PermGroup v4 = PermGroup::elementary_abelian_2(2);
  for (std::size_t g = 0; g < v4.order(); ++g) EXPECT_EQ(v4.centralizer(g).order(), 4u);
}

TEST(PermGroup, CharacterTables) {
  const PermGroup s2 = PermGroup::symmetric(2);
  ASSERT_EQ(s2.character_table().num_irreducibles(), 2u);
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : s2.character_table().rows) rows.push_back({*r[0].as_integer(), *r[1].as_integer()});
  std::sort(rows.begin(), rows.end());
  EXPECT_EQ(rows, (std::vector<std::vector<std::int64_t>>{{1, -1}, {1, 1}}));
  EXPECT_EQ(degrees(PermGroup::symmetric(3)), (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(degrees(PermGroup::symmetric(5)), (std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6}));
}

TEST(PermGroup, OrthogonalityIncludingNonRationalTables) {
  for (int n = 1; n <= 5; ++n) expect_orthonormal(PermGroup::symmetric(n));
  expect_orthonormal(PermGroup::elementary_abelian_2(3));
  const PermGroup s5 = PermGroup::symmetric(5);
  // centralizers of a 3-cycle, 4-cycle, 5-cycle and (123)(45) are cyclic or Z/3 x S2
  for (const char* g : {"(1,2,3)", "(1,2,3,4)", "(1,2,3,4,5)", "(1,2,3)(4,5)"})
    expect_orthonormal(s5.centralizer(parse_cycles(g, 5)));
}

TEST(PermGroup, SignCharacter) {
  auto sign_at = [](int n, const char* cycles) {
    const PermGroup g = PermGroup::symmetric(n);
    return g.sign_character().at(g.class_of(parse_cycles(cycles, n)));
  };
  EXPECT_EQ(sign_at(3, "(1,2,3)"), 1);
  EXPECT_EQ(sign_at(4, "(1,2)"), -1);
  EXPECT_EQ(sign_at(5, "(1,2,3,4)"), -1);
}

TEST(PermGroup, ClassFunctionPropertiesOnRandomPairs) {
  const PermGroup s5 = PermGroup::symmetric(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.order() - 1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t g = pick(testing::rng()), h = pick(testing::rng());
    const std::size_t conj = s5.multiply(s5.multiply(h, g), s5.inverse_of(h));
    EXPECT_EQ(s5.class_of(conj), s5.class_of(g));
    EXPECT_EQ(s5.element_order(conj), s5.element_order(g));
    EXPECT_EQ(perm_parity(s5.element(s5.multiply(g, h))), (perm_parity(s5.element(g)) + perm_parity(s5.element(h))) % 2);
    const std::size_t c = s5.conjugator(g, conj);
    EXPECT_EQ(s5.multiply(s5.multiply(c, g), s5.inverse_of(c)), conj);
  }
}

TEST(PermGroup, CycleNotationRoundTrip) {
  const Perm p = parse_cycles("(1,3,2)(4,5)", 5);
  EXPECT_EQ(cycle_string(p), "(1,3,2)(4,5)");
  EXPECT_EQ(perm_order(p), 6);
  EXPECT_EQ(compose(p, inverse(p)), identity_perm(5));
}

}  // namespace
}  // namespace uflip
