#include <gtest/gtest.h>

#include "tricusp/crosscheck.hpp"

using namespace tricusp;

namespace {

ErrorCode scan_error(const PolyP& phi, std::uint32_t q) {
  try {
    (void)scan_projective(phi, q);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Straightforward reference: every normalized point, every partial.
std::vector<ProjectivePoint> naive_scan(const PolyP& phi) {
  const PrimeField& f = phi.field();
  const std::uint32_t q = f.prime();
  std::vector<PolyP> eqs{phi};
  for (int v = 0; v < 4; ++v) eqs.push_back(partial_derivative(phi, v));
  std::vector<ProjectivePoint> out;
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (std::uint64_t n = 0; n < count; ++n) {
      ProjectivePoint pt{};
      pt[lead] = 1;
      std::uint64_t r = n;
      for (int i = 3; i > lead; --i) {
        pt[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      std::vector<Fp> x;
      for (auto c : pt) x.emplace_back(c, q);
      bool sing = true;
      for (const auto& e : eqs) sing = sing && evaluate(e, std::span<const Fp>(x)).is_zero();
      if (sing) out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Oracle, CubicOverF7) {
  const PrimeField f7(7);
  const ScanResult r = scan_projective(parse_poly("x1*x2*x3 - x0^3", f7, 4), 7);
  EXPECT_EQ(r.scanned, 400u);
  EXPECT_EQ(r.points, (std::vector<ProjectivePoint>{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}));
  ASSERT_EQ(r.evaluations.size(), 3u);
  for (const auto& e : r.evaluations)
    for (auto v : e) EXPECT_EQ(v, 0u);
}

TEST(Oracle, FermatQuarticIsSmooth) {
  const PrimeField f(101);
  EXPECT_TRUE(scan_projective(parse_poly("x0^4 + x1^4 + x2^4 + x3^4", f, 4), 101).points.empty());
}

TEST(Oracle, Errors) {
  const PrimeField big(263), f101(101), f7(7);
  EXPECT_EQ(scan_error(parse_poly("x0^3", big, 4), 263), ErrorCode::FieldTooLarge);
  EXPECT_EQ(scan_error(parse_poly("x0^3", f101, 4), 100), ErrorCode::InvalidField);
  EXPECT_EQ(scan_error(parse_poly("x0^3", f101, 4), 3), ErrorCode::InvalidField);
  EXPECT_EQ(scan_error(parse_poly("x0^3", f7, 4), 101), ErrorCode::FieldMismatch);
}

TEST(Oracle, ThreadCountDoesNotMatter) {
  const PrimeField f(31);
  const SurfaceInstance inst = draw_candidate(FamilyTag::Quintic2a, 3, f);
  const ScanResult one = scan_projective(inst.phi, 31, {1});
  const ScanResult four = scan_projective(inst.phi, 31, {4});
  EXPECT_EQ(one.points, four.points);
  EXPECT_EQ(one.scanned, four.scanned);
}

TEST(Oracle, MatchesNaiveScan) {
  const PrimeField f(13);
  for (FamilyTag tag : {FamilyTag::Quartic6, FamilyTag::Quintic2a, FamilyTag::QuinticCase3, FamilyTag::SexticB}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const SurfaceInstance inst = draw_candidate(tag, seed, f);
      EXPECT_EQ(scan_projective(inst.phi, 13).points, naive_scan(inst.phi)) << family_name(tag) << " " << seed;
    }
  }
}

TEST(Oracle, IsSingularAt) {
  const PrimeField f7(7);
  const PolyP cubic = parse_poly("x1*x2*x3 - x0^3", f7, 4);
  EXPECT_TRUE(is_singular_at(cubic, {0, 1, 0, 0}));
  EXPECT_FALSE(is_singular_at(cubic, {1, 1, 1, 1}));
}

TEST(CrossCheck, AgreesOnFamilies) {
  const PrimeField f(101);
  for (FamilyTag tag : {FamilyTag::Cubic3, FamilyTag::Quartic6, FamilyTag::Quintic2a, FamilyTag::QuinticCase3}) {
    const SurfaceInstance inst = construct(tag, 1, f);
    const CrossCheck cc = cross_check(inst, 101, {2});
    EXPECT_TRUE(cc.agree) << family_name(tag);
    EXPECT_LE(cc.scan_count, cc.solver_geometric);
    EXPECT_EQ(cc.scan_count, cc.solver_rational);
  }
}

TEST(CrossCheck, ConjugatePointsAreInvisibleToTheScan) {
  const PrimeField f7(7);
  const SurfaceInstance inst = custom_instance(parse_poly("x1^2*x3 + x2^2*x3 - x0^3", f7, 4));
  const CrossCheck cc = cross_check(inst, 7);
  EXPECT_TRUE(cc.agree);
  EXPECT_EQ(cc.scan_count, 1u);
  EXPECT_EQ(cc.solver_geometric, 3u);
}
