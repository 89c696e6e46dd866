#include <gtest/gtest.h>

#include "tricusp/report.hpp"

using namespace tricusp;

namespace {

const PrimeField F(10007);

}  // namespace

TEST(Report, InstanceRoundTrip) {
  for (FamilyTag tag : standard_families()) {
    const SurfaceInstance inst = construct(tag, 2, F);
    const nlohmann::json j = instance_to_json(inst);
    const SurfaceInstance back = instance_from_json(j);
    EXPECT_EQ(back.phi, inst.phi);
    EXPECT_EQ(back.tag, inst.tag);
    EXPECT_EQ(back.kind, inst.kind);
    EXPECT_EQ(back.certificate.size(), inst.certificate.size());
    EXPECT_EQ(instance_to_json(back), j) << family_name(tag);
  }
}

TEST(Report, DegenerationKeepsT) {
  const SurfaceInstance inst = construct(FamilyTag::QuinticDegeneration, 1, F, F.from_int(5));
  const SurfaceInstance back = instance_from_json(instance_to_json(inst));
  ASSERT_TRUE(back.t.has_value());
  EXPECT_EQ(back.t->value(), 5u);
}

TEST(Report, VerificationRoundTrip) {
  const VerificationReport r = verify_family(construct(FamilyTag::QuinticCase3, 1, F));
  const nlohmann::json j = report_to_json(r, false);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("verdict"), "PASS");
  EXPECT_FALSE(j.contains("timings"));
  const VerificationReport back = report_from_json(j);
  EXPECT_EQ(report_to_json(back, false), j);
  EXPECT_EQ(back.scheme->points.size(), 12u);
}

TEST(Report, DeterministicWithoutTimings) {
  const auto a = report_to_json(verify_family(construct(FamilyTag::Quartic6, 3, F)), false).dump();
  const auto b = report_to_json(verify_family(construct(FamilyTag::Quartic6, 3, F)), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_TRUE(report_to_json(verify_family(cubic_three_cusps(F)), true).contains("timings"));
}

TEST(Report, MalformedInput) {
  EXPECT_THROW(instance_from_json(nlohmann::json::object()), Error);
  nlohmann::json j = instance_to_json(cubic_three_cusps(F));
  j["certificate"]["kind"] = "mystery";
  EXPECT_THROW(instance_from_json(j), Error);
  j = instance_to_json(cubic_three_cusps(F));
  j["phi"] = "x9";
  try {
    (void)instance_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
  }
}

TEST(Report, ScanAndCrossCheckJson) {
  const PrimeField f7(7);
  const SurfaceInstance cubic = cubic_three_cusps(f7);
  const nlohmann::json scan = scan_to_json(scan_projective(cubic.phi, 7));
  EXPECT_EQ(scan.at("count"), 3);
  EXPECT_EQ(scan.at("scanned"), 400);
  const nlohmann::json cc = cross_check_to_json(cross_check(cubic, 7));
  EXPECT_EQ(cc.at("agree"), true);
  EXPECT_EQ(point_text({0, 1, 0, 0}), "[0:1:0:0]");
}
