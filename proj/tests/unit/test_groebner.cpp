#include <gtest/gtest.h>

#include "tricusp/groebner.hpp"

using namespace tricusp;

namespace {

using P = Poly<PrimeField>;
const PrimeField F(10007);

P parse(const std::string& s) { return parse_poly(s, F, 3); }

Ideal<PrimeField> ideal(std::initializer_list<const char*> gens) {
  std::vector<P> g;
  for (const char* s : gens) g.push_back(parse(s));
  return Ideal<PrimeField>(std::move(g));
}

// Sparse random affine polynomial of total degree <= maxdeg.
P random_poly(Rng& rng, int maxdeg, int terms) {
  std::vector<P::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    const int d = static_cast<int>(rng.below(maxdeg + 1));
    for (int k = 0; k < d; ++k) ++m.e[rng.below(3)];
    t.push_back({m, F.random(rng)});
  }
  return P::from_terms(F, 3, MonomialOrder::grevlex(), std::move(t));
}

}  // namespace

TEST(Groebner, Examples) {
  const auto g1 = buchberger(ideal({"x"}));
  ASSERT_EQ(g1.basis.size(), 1u);
  EXPECT_EQ(g1.basis[0], parse("x"));

  const auto g2 = buchberger(ideal({"x + y", "x - y"}));
  ASSERT_EQ(g2.basis.size(), 2u);
  EXPECT_TRUE(ideal_membership(parse("x"), g2));
  EXPECT_TRUE(ideal_membership(parse("y"), g2));
  EXPECT_TRUE(is_reduced(g2));

  EXPECT_TRUE(buchberger(ideal({"x*y - 1", "x^2"})).is_unit());
}

TEST(Groebner, NormalForms) {
  const auto gb = buchberger(ideal({"y^2", "z^2"}));
  EXPECT_FALSE(ideal_membership(parse("y*z"), gb));
  EXPECT_EQ(normal_form(parse("y*z"), gb), parse("y*z"));
  EXPECT_TRUE(ideal_membership(parse("y^2"), gb));
  EXPECT_TRUE(ideal_membership(parse("3*y^2*x + z^3"), gb));
}

TEST(Groebner, QuotientDimensions) {
  EXPECT_EQ(quotient_dimension(buchberger(ideal({"x", "y", "z"}))), 1u);
  EXPECT_EQ(quotient_dimension(buchberger(ideal({"x^2", "y^2", "z^2"}))), 8u);
  EXPECT_EQ(quotient_dimension(buchberger(ideal({"y", "x", "-3*z^2"}))), 2u);
  EXPECT_EQ(quotient_dimension(buchberger(ideal({"x*y", "z"}))), std::nullopt);
  EXPECT_EQ(quotient_dimension(buchberger(ideal({"x*y - 1", "x^2"}))), 0u);
}

TEST(Groebner, EmptyIdealRejected) {
  EXPECT_THROW(Ideal<PrimeField>(std::vector<P>{P(F, 3)}), Error);
}

TEST(Groebner, RandomIdealProperties) {
  Rng rng(2024);
  int zero_dim = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<P> gens;
    const int ngens = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < ngens; ++i) gens.push_back(random_poly(rng, 2 + static_cast<int>(rng.below(2)), 2 + static_cast<int>(rng.below(4))));
    std::erase_if(gens, [](const P& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    const Ideal<PrimeField> id(gens);
    const auto gb = buchberger(id);
    ASSERT_TRUE(s_polynomials_reduce(gb)) << "trial " << trial;
    ASSERT_TRUE(is_reduced(gb)) << "trial " << trial;
    for (const auto& g : gens) ASSERT_TRUE(ideal_membership(g, gb)) << "trial " << trial;

    const P probe = random_poly(rng, 3, 4);
    const P nf = normal_form(probe, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_TRUE(ideal_membership(probe - nf, gb));

    const auto dim = quotient_dimension(gb);
    if (dim && *dim <= 12) {
      ++zero_dim;
      const auto lex = buchberger(id, MonomialOrder::lex());
      ASSERT_TRUE(s_polynomials_reduce(lex));
      EXPECT_EQ(quotient_dimension(lex), dim) << "trial " << trial;
    }
  }
  EXPECT_GT(zero_dim, 100);
}

TEST(Groebner, BlockOrder) {
  const auto id = ideal({"x^2 - y", "y^2 - z", "z^2 - 1"});
  const auto a = buchberger(id, MonomialOrder::block(1));
  const auto b = buchberger(id);
  EXPECT_TRUE(s_polynomials_reduce(a));
  EXPECT_EQ(quotient_dimension(a), quotient_dimension(b));
  EXPECT_EQ(quotient_dimension(b), 8u);
}
