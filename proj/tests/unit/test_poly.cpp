#include <gtest/gtest.h>

#include "tricusp/poly.hpp"

using namespace tricusp;

namespace {

using P = Poly<PrimeField>;
const PrimeField F(10007);

P parse(const std::string& s, int nvars = 4) { return parse_poly(s, F, nvars); }

std::vector<Fp> point(std::initializer_list<int> v) {
  std::vector<Fp> out;
  for (int x : v) out.push_back(F.from_int(x));
  return out;
}

}  // namespace

TEST(Poly, BinomialCubeHasFourTerms) {
  const P s = parse("x1*x2 + x0*x3");
  const P cube = s.pow(3);
  EXPECT_EQ(cube.size(), 4u);
  EXPECT_EQ(cube, parse("x1^3*x2^3 + 3*x0*x1^2*x2^2*x3 + 3*x0^2*x1*x2*x3^2 + x0^3*x3^3"));
}

TEST(Poly, ExactDivision) {
  const auto bad = exact_div(parse("x*y + 1", 3), parse("x", 3));
  EXPECT_FALSE(bad.exact);
  EXPECT_EQ(bad.remainder, parse("1", 3));

  const P a = parse("x0^2 + 3*x1*x2 - x3"), b = parse("x0 - 2*x1");
  const auto ok = exact_div(a * b, b);
  EXPECT_TRUE(ok.exact);
  EXPECT_EQ(ok.quotient, a);

  try {
    (void)exact_div(a, P(F, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZeroPoly);
  }
}

TEST(Poly, MismatchedRings) {
  const P a = parse("x0"), b = parse_poly("x0", PrimeField(101), 4);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW((void)(a * parse("x", 3)), Error);
}

TEST(Poly, PartialDerivatives) {
  const P cubic = parse("x1*x2*x3 - x0^3");
  EXPECT_EQ(partial_derivative(cubic, 0), parse("-3*x0^2"));
  EXPECT_EQ(partial_derivative(cubic, 3), parse("x1*x2"));
  EXPECT_TRUE(partial_derivative(parse("17"), 2).is_zero());
}

TEST(Poly, LeibnizRule) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const P f = random_homogeneous(2, seed, F), g = random_homogeneous(3, seed + 1000, F);
    for (int v = 0; v < 4; ++v)
      EXPECT_EQ(partial_derivative(f * g, v), partial_derivative(f, v) * g + f * partial_derivative(g, v));
  }
}

TEST(Poly, EulerRelation) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int d = static_cast<int>(seed % 6) + 1;
    const P phi = random_homogeneous(d, seed, F);
    P sum(F, 4);
    for (int v = 0; v < 4; ++v) sum += P::variable(F, 4, v) * partial_derivative(phi, v);
    ASSERT_EQ(sum, phi.scaled(F.from_int(d))) << "seed " << seed;
  }
}

TEST(Poly, Evaluate) {
  const P cubic = parse("x1*x2*x3 - x0^3");
  EXPECT_TRUE(evaluate(cubic, std::span<const Fp>(point({0, 1, 0, 0}))).is_zero());
  EXPECT_TRUE(evaluate(cubic, std::span<const Fp>(point({1, 1, 1, 1}))).is_zero());
  EXPECT_EQ(evaluate(cubic, std::span<const Fp>(point({2, 1, 1, 1}))), F.from_int(-7));
  EXPECT_THROW(evaluate(cubic, std::span<const Fp>(point({1, 1, 1}))), Error);
}

TEST(Poly, EvaluationIsMultiplicative) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const P f = random_homogeneous(3, seed, F), g = random_homogeneous(2, seed + 500, F);
    std::vector<Fp> x;
    for (int i = 0; i < 4; ++i) x.push_back(F.random(rng));
    const std::span<const Fp> sx(x);
    EXPECT_EQ(evaluate(f * g, sx), evaluate(f, sx) * evaluate(g, sx));
    EXPECT_EQ(evaluate(f + g, sx), evaluate(f, sx) + evaluate(g, sx));
  }
}

TEST(Poly, EvaluateInExtension) {
  const PrimeField f7(7);
  const ExtensionField f49(UPoly(7, {1, 0, 1}));
  const Poly<PrimeField> f = parse_poly("x^2 + 1", f7, 3);
  const std::vector<ExtElement> pt{f49.generator(), f49.zero(), f49.zero()};
  EXPECT_TRUE(evaluate(f, f49, std::span<const ExtElement>(pt)).is_zero());
}

TEST(Poly, Localize) {
  const P cubic = parse("x1*x2*x3 - x0^3");
  const auto origin = point({0, 0, 0});
  const P local = localize(cubic, 1, F, std::span<const Fp>(origin));
  EXPECT_EQ(local, parse("y*z - x^3", 3));
  EXPECT_EQ(chart_variables(1), (std::array<int, 3>{0, 2, 3}));

  const auto proj = point({0, 0, 1, 0});
  EXPECT_THROW(localize_projective(cubic, 0, F, std::span<const Fp>(proj)), Error);
  try {
    (void)localize_projective(cubic, 0, F, std::span<const Fp>(proj));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointNotInChart);
  }
}

TEST(Poly, LocalizeTranslates) {
  // Local equation at p has value phi(p) at the origin.
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const P phi = random_homogeneous(4, seed, F);
    std::vector<Fp> a{F.random(rng), F.random(rng), F.random(rng)};
    const P local = localize(phi, 2, F, std::span<const Fp>(a));
    const std::vector<Fp> proj{a[0], a[1], F.one(), a[2]};
    EXPECT_EQ(local.coefficient(Monomial{}), evaluate(phi, std::span<const Fp>(proj)));
  }
}

TEST(Poly, RandomHomogeneous) {
  const P c = random_homogeneous(0, 7, F);
  EXPECT_LE(c.size(), 1u);
  EXPECT_EQ(monomials_of_degree(4, 2).size(), 10u);
  EXPECT_EQ(monomials_of_degree(4, 6).size(), 84u);
  EXPECT_EQ(random_homogeneous(3, 11, F), random_homogeneous(3, 11, F));
  EXPECT_NE(random_homogeneous(3, 11, F), random_homogeneous(3, 12, F));
  EXPECT_TRUE(random_homogeneous(5, 11, F).is_homogeneous());
}

TEST(Poly, ParseExamples) {
  const P cubic = parse("x1*x2*x3 - x0^3");
  EXPECT_EQ(cubic.size(), 2u);
  EXPECT_EQ(cubic.coefficient(Monomial::variable(0, 3)), F.from_int(-1));
  EXPECT_TRUE(parse("0").is_zero());
  EXPECT_EQ(parse("1/2*x0"), P::variable(F, 4, 0).scaled(F.from_int(2).inverse()));
  EXPECT_EQ(parse("x0 - -x1"), parse("x0 + x1"));
  EXPECT_EQ(parse("x0*x0"), parse("x0^2"));
  EXPECT_EQ(parse("3 x0").size(), 1u);
}

TEST(Poly, ParseErrors) {
  auto code_of = [](const std::string& s) {
    try {
      (void)parse_poly(s, F, 4);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of("x0 +"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of(""), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("x0 x1"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("x4"), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of("x0 + y"), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of("1/0"), ErrorCode::SyntaxError);
  try {
    (void)parse_poly("x0 + * x1", F, 4);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Poly, FormatRoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const P f = random_homogeneous(static_cast<int>(seed % 7), seed, F);
    EXPECT_EQ(parse(format_poly(f)), f) << format_poly(f);
  }
  const Poly<RationalField> q = parse_poly("-1/3*x^2 + 5/7*y*z - 2", RationalField(), 3);
  EXPECT_EQ(parse_poly(format_poly(q), RationalField(), 3), q);
}

TEST(Poly, RingAxioms) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const P a = random_homogeneous(2, seed, F), b = random_homogeneous(3, seed + 1, F),
            c = random_homogeneous(1, seed + 2, F);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a * b).normalized());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, OrderChangeKeepsPolynomial) {
  const P f = random_homogeneous(4, 9, F);
  const P lex = f.with_order(MonomialOrder::lex());
  EXPECT_TRUE(lex.normalized());
  EXPECT_EQ(lex.with_order(MonomialOrder::grevlex()), f);
}
