#include <gtest/gtest.h>

#include "support.hpp"
#include "uflip/error.hpp"
#include "uflip/mgamma.hpp"

namespace uflip {
namespace {

std::shared_ptr<const MGamma> make(PermGroup g) { return std::make_shared<MGamma>(std::move(g)); }

// values of a linear character of Gamma on the classes of Z(1), read off the permutation sign
std::vector<int> sign_on_identity_centralizer(const MGamma& m) {
  std::vector<int> v;
  const PermGroup& z = m.centralizer(0);
  for (const auto& c : z.classes()) v.push_back(perm_parity(z.element(c.representative)) ? -1 : 1);
  return v;
}

std::vector<int> trivial_on_identity_centralizer(const MGamma& m) {
  return std::vector<int>(m.centralizer(0).classes().size(), 1);
}

using Matrix = std::vector<std::vector<Rat>>;

Matrix square(const Matrix& s) {
  Matrix out(s.size(), std::vector<Rat>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < s.size(); ++k) out[i][j] += s[i][k] * s[k][j];
  return out;
}

bool is_identity(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != Rat(i == j ? 1 : 0)) return false;
  return true;
}

TEST(MGamma, EnumerationSizes) {
  EXPECT_EQ(make(PermGroup::symmetric(2))->size(), 4u);
  EXPECT_EQ(make(PermGroup::symmetric(3))->size(), 8u);
  EXPECT_EQ(make(PermGroup::trivial())->size(), 1u);
  EXPECT_EQ(make(PermGroup::symmetric(4))->size(), 21u);
  EXPECT_EQ(make(PermGroup::symmetric(5))->size(), 39u);
  EXPECT_EQ(make(PermGroup::elementary_abelian_2(2))->size(), 16u);
}

TEST(MGamma, PairingExamples) {
  auto z2 = make(PermGroup::symmetric(2));
  const MGammaElt unit = z2->identity_class_with(trivial_on_identity_centralizer(*z2));
  EXPECT_EQ(z2->pairing(unit, unit), Rat(1, 2));
  auto one = make(PermGroup::trivial());
  EXPECT_EQ(one->pairing(0, 0), Rat(1));
}

// <(g, rho), (1, sgn)> = sgn(g) dim(rho) / |Z(g)|, for every element of M(S_n)
TEST(MGamma, PairingAgainstSignMatchesClosedForm) {
  for (int n = 2; n <= 5; ++n) {
    auto m = make(PermGroup::symmetric(n));
    const MGammaElt sgn = m->identity_class_with(sign_on_identity_centralizer(*m));
    for (const auto& x : m->elements()) {
      const Perm& g = m->group().element(m->group().classes()[x.g_class].representative);
      const Rat expected = Rat(perm_parity(g) ? -1 : 1) * m->dim_over_centralizer(x);
      EXPECT_EQ(m->pairing(x, sgn), expected) << "S" << n << " " << m->label(x);
    }
  }
}

// Abelian Gamma: M = Gamma x Gamma^ and <(x, s), (y, t)> = s(y) t(x) / |Gamma| for real characters
TEST(MGamma, ElementaryAbelianPairingMatchesDirectFormula) {
  for (int r = 1; r <= 3; ++r) {
    const PermGroup g = PermGroup::elementary_abelian_2(r);
    auto m = make(g);
    const auto& table = g.character_table();
    auto value = [&](std::size_t chi, std::size_t elem) { return *table.rows[chi][g.class_of(elem)].as_integer(); };
    auto lookup = [&](std::size_t elem, std::size_t chi) {
      std::map<Perm, std::int64_t> values;
      for (std::size_t h = 0; h < g.order(); ++h) values[g.element(h)] = value(chi, h);
      return m->find(g.element(elem), values);
    };
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t s = 0; s < table.num_irreducibles(); ++s)
        for (std::size_t y = 0; y < g.order(); ++y)
          for (std::size_t t = 0; t < table.num_irreducibles(); ++t)
            EXPECT_EQ(m->pairing(lookup(x, s), lookup(y, t)),
                      Rat(value(s, y) * value(t, x), static_cast<long>(g.order())));
  }
}

TEST(MGamma, FourierMatrixIsAnInvolution) {
  for (int n = 1; n <= 4; ++n) {
    auto m = make(PermGroup::symmetric(n));
    EXPECT_TRUE(is_identity(square(m->pairing_matrix()))) << "S" << n;
  }
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(is_identity(square(make(PermGroup::elementary_abelian_2(r))->pairing_matrix())));
}

TEST(MGamma, S3PairingMatrix) {
  auto m = make(PermGroup::symmetric(3));
  const Matrix s = m->pairing_matrix();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(s[i][j], s[j][i]);
  const MGammaElt one = m->identity_class_with(trivial_on_identity_centralizer(*m));
  EXPECT_EQ(m->pairing(one, one), Rat(1, 6));
  const MGammaElt t = m->find(parse_cycles("(1,2)", 3), {{parse_cycles("(1,2)", 3), 1}});
  const MGammaElt c = m->find(parse_cycles("(1,2,3)", 3), {{parse_cycles("(1,2,3)", 3), 1}});
  EXPECT_EQ(m->pairing(t, t), Rat(1, 2));
  EXPECT_EQ(m->pairing(c, c), Rat(2, 3));
  EXPECT_EQ(m->pairing(one, t), Rat(1, 2));
  EXPECT_EQ(m->pairing(one, c), Rat(1, 3));
  EXPECT_EQ(m->pairing(t, c), Rat(0));
}

TEST(MGamma, S5PairingIsIrrationalButExact) {
  auto m = make(PermGroup::symmetric(5));
  EXPECT_FALSE(m->pairing_is_rational());
  bool threw = false;
  for (std::size_t i = 0; i < m->size() && !threw; ++i)
    for (std::size_t j = 0; j < m->size() && !threw; ++j) {
      if (m->pairing_sum(i, j).as_integer()) continue;
      EXPECT_THROW(m->pairing(i, j), Error);
      threw = true;
    }
  EXPECT_TRUE(threw);
}

TEST(MGamma, ConvolutionExamples) {
  auto m = make(PermGroup::symmetric(3));
  const MGammaElt one = m->identity_class_with(trivial_on_identity_centralizer(*m));
  const MGammaElt sgn = m->identity_class_with(sign_on_identity_centralizer(*m));
  for (const auto& x : m->elements()) EXPECT_EQ(m->convolve_star(one, x), x);
  const Perm t = parse_cycles("(1,2)", 3);
  EXPECT_EQ(m->convolve_star(sgn, m->find(t, {{t, 1}})), m->find(t, {{t, -1}}));
  EXPECT_EQ(m->invertibles().size(), 2u);
  EXPECT_TRUE(m->is_invertible(sgn));

  auto v = make(PermGroup::elementary_abelian_2(2));
  EXPECT_EQ(v->invertibles().size(), 16u);  // abelian: every (g, rho) is invertible
}

TEST(MGamma, RingHomomorphism) {
  EXPECT_TRUE(make(PermGroup::trivial())->verify_ring_hom());
  EXPECT_TRUE(make(PermGroup::symmetric(2))->verify_ring_hom());
  EXPECT_TRUE(make(PermGroup::elementary_abelian_2(2))->verify_ring_hom());
  EXPECT_TRUE(make(PermGroup::symmetric(3))->verify_ring_hom());
  EXPECT_TRUE(make(PermGroup::symmetric(4))->verify_ring_hom());
  EXPECT_TRUE(make(PermGroup::symmetric(5))->verify_ring_hom());
}

TEST(MGamma, GroupModelAdapter) {
  GroupFourierModel model(make(PermGroup::symmetric(3)));
  EXPECT_EQ(model.size(), 8u);
  EXPECT_EQ(model.pairing(model.identity(), model.identity()), Rat(1, 6));
  EXPECT_EQ(model.invertibles().size(), 2u);
  for (std::size_t x = 0; x < model.size(); ++x) EXPECT_EQ(model.convolve(model.identity(), x), x);
  EXPECT_EQ(model.label(model.identity()), "((), [1,1,1])");
}

}  // namespace
}  // namespace uflip
