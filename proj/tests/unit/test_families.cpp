#include <gtest/gtest.h>

#include "tricusp/certify.hpp"

using namespace tricusp;

namespace {

const PrimeField F(10007);

PolyP parse(const std::string& s) { return parse_poly(s, F, 4); }

}  // namespace

TEST(Families, MinimalTable) {
  EXPECT_EQ(minimal_table(), (std::map<int, int>{{3, 3}, {4, 6}, {5, 12}, {6, 18}}));
}

TEST(Families, Names) {
  for (FamilyTag tag : {FamilyTag::Cubic3, FamilyTag::Quartic6, FamilyTag::Quintic2a, FamilyTag::QuinticCase3,
                        FamilyTag::QuinticDegeneration, FamilyTag::SexticA, FamilyTag::SexticB})
    EXPECT_EQ(parse_family(family_name(tag)), tag);
  EXPECT_THROW(parse_family("septic"), Error);
  EXPECT_EQ(standard_families().size(), 6u);
}

TEST(Families, CubicIsFixed) {
  const SurfaceInstance inst = cubic_three_cusps(F);
  EXPECT_EQ(inst.phi, parse("x1*x2*x3 - x0^3"));
  EXPECT_EQ(inst.degree(), 3);
  EXPECT_EQ(inst.predicted.cusps, 3);
  EXPECT_TRUE(inst.rejections.empty());
}

TEST(Families, DrawsAreDeterministic) {
  for (FamilyTag tag : {FamilyTag::Quartic6, FamilyTag::Quintic2a, FamilyTag::QuinticCase3, FamilyTag::SexticA,
                        FamilyTag::SexticB}) {
    const SurfaceInstance a = draw_candidate(tag, 42, F), b = draw_candidate(tag, 42, F);
    EXPECT_EQ(a.phi, b.phi) << family_name(tag);
    EXPECT_NE(a.phi, draw_candidate(tag, 43, F).phi) << family_name(tag);
  }
}

TEST(Families, DegreesAndCertificates) {
  const std::map<FamilyTag, int> degree{{FamilyTag::Quartic6, 4}, {FamilyTag::Quintic2a, 5},
                                        {FamilyTag::QuinticCase3, 5}, {FamilyTag::SexticA, 6},
                                        {FamilyTag::SexticB, 6}};
  for (const auto& [tag, d] : degree) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const SurfaceInstance inst = draw_candidate(tag, seed, F);
      EXPECT_EQ(inst.degree(), d);
      EXPECT_TRUE(inst.phi.is_homogeneous());
      const Certificate c = certificate_check(inst);
      EXPECT_TRUE(c.identity_ok) << family_name(tag) << " seed " << seed << ": " << c.note;
      EXPECT_EQ(c.residual_degree, 6 - d);
    }
  }
}

TEST(Families, QuinticResidualIsThePlane) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SurfaceInstance inst = draw_candidate(FamilyTag::Quintic2a, seed, F);
    const Certificate c = certificate_check(inst);
    ASSERT_TRUE(c.residual.has_value());
    EXPECT_EQ(*c.residual, parse("x0"));
  }
}

TEST(Families, DegenerationAtZeroIsCaseThree) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SurfaceInstance d = draw_candidate(FamilyTag::QuinticDegeneration, seed, F, F.zero());
    const SurfaceInstance c = draw_candidate(FamilyTag::QuinticCase3, seed, F);
    EXPECT_EQ(d.phi, c.phi);
    EXPECT_EQ(*d.find("s"), *c.find("s"));
  }
  EXPECT_THROW(draw_candidate(FamilyTag::QuinticDegeneration, 1, F), Error);
  EXPECT_THROW(draw_candidate(FamilyTag::QuinticDegeneration, 1, F, PrimeField(101).one()), Error);
}

TEST(Families, CertificateFactorsDoNotDividePhi) {
  for (FamilyTag tag : standard_families()) {
    if (tag == FamilyTag::Cubic3) continue;
    const SurfaceInstance inst = draw_candidate(tag, 3, F);
    for (const auto& np : inst.certificate) {
      if (np.name == "residual" || np.poly.is_constant()) continue;
      EXPECT_FALSE(exact_div(inst.phi, np.poly).exact) << family_name(tag) << " " << np.name;
    }
  }
}

TEST(Families, ProductAnsatzFallsShort) {
  // The product recipe satisfies the identity but its surface is not a six-cusp quartic.
  const SurfaceInstance inst = quartic_product_ansatz(1, F);
  EXPECT_TRUE(certificate_check(inst).identity_ok);
  const VerificationReport r = verify_family(inst);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.scheme.has_value());
  EXPECT_EQ(r.scheme->count(Classification::A2), 2u);
  EXPECT_EQ(r.scheme->count(Classification::A1), 4u);
}

TEST(Families, ConstructAcceptsFirstGoodDraw) {
  const SurfaceInstance inst = quintic_2a(7, F);
  EXPECT_EQ(inst.seed, 7u);
  if (inst.rejections.empty()) {
    EXPECT_EQ(inst.draw_seed, 7u);
    EXPECT_EQ(inst.phi, draw_candidate(FamilyTag::Quintic2a, 7, F).phi);
  }
  EXPECT_EQ(inst.phi, quintic_2a(7, F).phi);
}

TEST(Families, CustomInstanceHasNoCertificate) {
  const SurfaceInstance inst = custom_instance(parse("x0^4 + x1^4 + x2^4 + x3^4"));
  EXPECT_EQ(inst.tag, FamilyTag::Custom);
  EXPECT_EQ(inst.kind, CertificateKind::None);
  EXPECT_EQ(inst.predicted.cusps, 6);
  EXPECT_THROW(draw_candidate(FamilyTag::Custom, 1, F), Error);
}
