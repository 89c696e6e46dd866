#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "tricusp/tricusp.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  tricusp_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, Versions) {
  EXPECT_STREQ(tricusp_schema_version(), "1.0");
  EXPECT_GT(std::strlen(tricusp_version()), 0u);
  EXPECT_STREQ(tricusp_status_name(TRICUSP_OK), "OK");
  EXPECT_STREQ(tricusp_status_name(TRICUSP_E_FIELD_TOO_LARGE), "FieldTooLarge");
  EXPECT_STREQ(tricusp_status_name(TRICUSP_E_INVALID_ARGUMENT), "InvalidArgument");
}

TEST(CApi, ConstructVerifyRoundTrip) {
  tricusp_instance* inst = nullptr;
  ASSERT_EQ(tricusp_construct("quintic2a", 1, 10007, nullptr, &inst), TRICUSP_OK);
  EXPECT_EQ(tricusp_instance_degree(inst), 5);

  char* json = nullptr;
  ASSERT_EQ(tricusp_instance_to_json(inst, &json), TRICUSP_OK);
  const std::string text = take(json);
  tricusp_instance* back = nullptr;
  ASSERT_EQ(tricusp_instance_from_json(text.c_str(), &back), TRICUSP_OK);

  tricusp_report* rep = nullptr;
  ASSERT_EQ(tricusp_verify(back, &rep), TRICUSP_OK);
  EXPECT_EQ(tricusp_report_pass(rep), 1);
  char* rj = nullptr;
  ASSERT_EQ(tricusp_report_to_json(rep, 0, &rj), TRICUSP_OK);
  const std::string report = take(rj);
  EXPECT_NE(report.find("\"verdict\": \"PASS\""), std::string::npos);
  EXPECT_EQ(report.find("timings"), std::string::npos);

  // A full report is accepted where an instance is expected.
  tricusp_instance* again = nullptr;
  EXPECT_EQ(tricusp_instance_from_json(report.c_str(), &again), TRICUSP_OK);

  tricusp_instance_free(again);
  tricusp_report_free(rep);
  tricusp_instance_free(back);
  tricusp_instance_free(inst);
}

TEST(CApi, ErrorCodesAndMessages) {
  tricusp_instance* inst = nullptr;
  EXPECT_EQ(tricusp_construct("cubic3", 0, 12, nullptr, &inst), TRICUSP_E_INVALID_FIELD);
  EXPECT_GT(std::strlen(tricusp_last_error()), 0u);
  EXPECT_EQ(tricusp_construct("nonagon", 0, 101, nullptr, &inst), TRICUSP_E_INVALID_ARGUMENT);
  EXPECT_EQ(tricusp_construct("quintic_degeneration", 0, 101, nullptr, &inst), TRICUSP_E_INVALID_ARGUMENT);
  EXPECT_EQ(tricusp_construct(nullptr, 0, 101, nullptr, &inst), TRICUSP_E_INVALID_ARGUMENT);
  EXPECT_EQ(tricusp_instance_from_text("x0 + ", 101, &inst), TRICUSP_E_SYNTAX);
  EXPECT_EQ(tricusp_instance_from_text("x7", 101, &inst), TRICUSP_E_UNKNOWN_VARIABLE);
  EXPECT_EQ(tricusp_instance_from_json("{not json", &inst), TRICUSP_E_SYNTAX);
  int n = 0;
  EXPECT_EQ(tricusp_minimal_count(7, &n), TRICUSP_E_INVALID_ARGUMENT);
  ASSERT_EQ(tricusp_minimal_count(6, &n), TRICUSP_OK);
  EXPECT_EQ(n, 18);
  EXPECT_STREQ(tricusp_last_error(), "");
}

TEST(CApi, DegenerationTakesT) {
  tricusp_instance* inst = nullptr;
  const int64_t t = 0;
  ASSERT_EQ(tricusp_construct("quintic_degeneration", 1, 101, &t, &inst), TRICUSP_OK);
  tricusp_instance_free(inst);
}

TEST(CApi, OracleAndClassify) {
  tricusp_instance* inst = nullptr;
  ASSERT_EQ(tricusp_instance_from_text("x1*x2*x3 - x0^3", 7, &inst), TRICUSP_OK);
  char* out = nullptr;
  ASSERT_EQ(tricusp_oracle_scan(inst, 7, 2, &out), TRICUSP_OK);
  EXPECT_NE(take(out).find("\"count\": 3"), std::string::npos);
  EXPECT_EQ(tricusp_oracle_scan(inst, 11, 1, &out), TRICUSP_E_FIELD_MISMATCH);
  int agree = 0;
  ASSERT_EQ(tricusp_cross_check(inst, 7, 1, &agree, nullptr), TRICUSP_OK);
  EXPECT_EQ(agree, 1);
  tricusp_instance_free(inst);

  ASSERT_EQ(tricusp_instance_from_text("x0^3", 263, &inst), TRICUSP_OK);
  EXPECT_EQ(tricusp_oracle_scan(inst, 263, 1, &out), TRICUSP_E_FIELD_TOO_LARGE);
  tricusp_instance_free(inst);

  ASSERT_EQ(tricusp_classify("x1*x2*x3 - x0^3", 10007, 1, &out), TRICUSP_OK);
  EXPECT_NE(take(out).find("\"A2\": 3"), std::string::npos);
  EXPECT_EQ(tricusp_classify("x0*x1", 10007, 1, &out), TRICUSP_E_POSITIVE_DIMENSIONAL);
}
