#include "tricusp/tricusp.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "tricusp/report.hpp"

struct tricusp_instance {
  tricusp::SurfaceInstance inst;
};

struct tricusp_report {
  tricusp::VerificationReport report;
};

namespace {

thread_local std::string last_error;

tricusp_status to_status(tricusp::ErrorCode code) {
  using tricusp::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroInverse: return TRICUSP_E_ZERO_INVERSE;
    case ErrorCode::IncompatibleFields: return TRICUSP_E_INCOMPATIBLE_FIELDS;
    case ErrorCode::CharacteristicMismatch: return TRICUSP_E_CHARACTERISTIC_MISMATCH;
    case ErrorCode::InvalidField: return TRICUSP_E_INVALID_FIELD;
    case ErrorCode::FieldMismatch: return TRICUSP_E_FIELD_MISMATCH;
    case ErrorCode::DivisionByZeroPoly: return TRICUSP_E_DIVISION_BY_ZERO_POLY;
    case ErrorCode::SyntaxError: return TRICUSP_E_SYNTAX;
    case ErrorCode::UnknownVariable: return TRICUSP_E_UNKNOWN_VARIABLE;
    case ErrorCode::PointNotInChart: return TRICUSP_E_POINT_NOT_IN_CHART;
    case ErrorCode::NotZeroDimensional: return TRICUSP_E_NOT_ZERO_DIMENSIONAL;
    case ErrorCode::DegenerateCoordinates: return TRICUSP_E_DEGENERATE_COORDINATES;
    case ErrorCode::PositiveDimensionalSingularLocus: return TRICUSP_E_POSITIVE_DIMENSIONAL;
    case ErrorCode::NotSingular: return TRICUSP_E_NOT_SINGULAR;
    case ErrorCode::DegenerateInstance: return TRICUSP_E_DEGENERATE_INSTANCE;
    case ErrorCode::ConstructionFailed: return TRICUSP_E_CONSTRUCTION_FAILED;
    case ErrorCode::DegreeMismatch: return TRICUSP_E_DEGREE_MISMATCH;
    case ErrorCode::FieldTooLarge: return TRICUSP_E_FIELD_TOO_LARGE;
    case ErrorCode::InvalidArgument: return TRICUSP_E_INVALID_ARGUMENT;
  }
  return TRICUSP_E_INTERNAL;
}

// Runs f, translating exceptions into status codes and the thread's message.
template <class F>
tricusp_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return TRICUSP_OK;
  } catch (const tricusp::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return TRICUSP_E_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw tricusp::Error(tricusp::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* tricusp_version(void) { return tricusp::tool_version(); }
const char* tricusp_schema_version(void) { return tricusp::kSchemaVersion; }
const char* tricusp_last_error(void) { return last_error.c_str(); }
void tricusp_string_free(char* s) { std::free(s); }

const char* tricusp_status_name(tricusp_status status) {
  switch (status) {
    case TRICUSP_OK: return "OK";
    case TRICUSP_E_INTERNAL: return "Internal";
    default: break;
  }
  // The error codes follow the C++ enumeration order.
  if (status > TRICUSP_OK && status < TRICUSP_E_INTERNAL)
    return tricusp::error_code_name(static_cast<tricusp::ErrorCode>(status - 1));
  return "Unknown";
}

tricusp_status tricusp_construct(const char* family, uint64_t seed, uint32_t prime, const int64_t* t,
                                 tricusp_instance** out) {
  return guarded([&] {
    require(family && out, "null argument");
    const tricusp::PrimeField f(prime);
    const tricusp::FamilyTag tag = tricusp::parse_family(family);
    require(tag != tricusp::FamilyTag::Custom, "custom surfaces come from tricusp_instance_from_text");
    std::optional<tricusp::Fp> tv;
    if (tag == tricusp::FamilyTag::QuinticDegeneration) {
      require(t != nullptr, "quintic_degeneration needs t");
      tv = f.from_int(*t);
    }
    *out = new tricusp_instance{tricusp::construct(tag, seed, f, tv)};
  });
}

tricusp_status tricusp_instance_from_text(const char* poly, uint32_t prime, tricusp_instance** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    const tricusp::PrimeField f(prime);
    tricusp::PolyP phi = tricusp::parse_poly(poly, f, 4);
    require(!phi.is_zero() && phi.is_homogeneous(), "surface equation must be a nonzero homogeneous form");
    *out = new tricusp_instance{tricusp::custom_instance(std::move(phi))};
  });
}

tricusp_status tricusp_instance_from_json(const char* json, tricusp_instance** out) {
  return guarded([&] {
    require(json && out, "null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw tricusp::SyntaxError(e.byte, "invalid JSON");
    }
    *out = new tricusp_instance{tricusp::instance_from_json(j.contains("instance") ? j.at("instance") : j)};
  });
}

tricusp_status tricusp_instance_to_json(const tricusp_instance* inst, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    nlohmann::json j = tricusp::instance_to_json(inst->inst);
    j["schema_version"] = tricusp::kSchemaVersion;
    *out = dup(j.dump(2));
  });
}

int tricusp_instance_degree(const tricusp_instance* inst) { return inst ? inst->inst.degree() : -1; }
void tricusp_instance_free(tricusp_instance* inst) { delete inst; }

tricusp_status tricusp_verify(const tricusp_instance* inst, tricusp_report** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    *out = new tricusp_report{tricusp::verify_family(inst->inst)};
  });
}

int tricusp_report_pass(const tricusp_report* report) { return report && report->report.pass ? 1 : 0; }

tricusp_status tricusp_report_to_json(const tricusp_report* report, int include_timings, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = dup(tricusp::report_to_json(report->report, include_timings != 0).dump(2));
  });
}

void tricusp_report_free(tricusp_report* report) { delete report; }

tricusp_status tricusp_classify(const char* poly, uint32_t prime, uint64_t seed, char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    const tricusp::PrimeField f(prime);
    const tricusp::PolyP phi = tricusp::parse_poly(poly, f, 4);
    require(!phi.is_zero() && phi.is_homogeneous(), "surface equation must be a nonzero homogeneous form");
    const tricusp::SingularScheme s = tricusp::find_singular_points(phi, tricusp::SingularOptions{seed});
    nlohmann::json j = tricusp::scheme_to_json(s);
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& p : s.points) {
      const std::string name = tricusp::classification_name(p.classification, p.tjurina);
      counts[name] = counts.value(name, 0) + 1;
    }
    j["classification_counts"] = counts;
    j["prime"] = prime;
    j["phi"] = tricusp::format_poly(phi);
    j["schema_version"] = tricusp::kSchemaVersion;
    *out = dup(j.dump(2));
  });
}

tricusp_status tricusp_oracle_scan(const tricusp_instance* inst, uint32_t q, unsigned jobs, char** out) {
  return guarded([&] {
    require(inst && out, "null argument");
    nlohmann::json j = tricusp::scan_to_json(tricusp::scan_projective(inst->inst.phi, q, {jobs}));
    j["schema_version"] = tricusp::kSchemaVersion;
    *out = dup(j.dump(2));
  });
}

tricusp_status tricusp_cross_check(const tricusp_instance* inst, uint32_t q, unsigned jobs, int* agree, char** out) {
  return guarded([&] {
    require(inst && agree, "null argument");
    const tricusp::CrossCheck cc = tricusp::cross_check(inst->inst, q, {jobs});
    *agree = cc.agree ? 1 : 0;
    if (out) *out = dup(tricusp::cross_check_to_json(cc).dump(2));
  });
}

tricusp_status tricusp_minimal_count(int degree, int* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto& table = tricusp::minimal_table();
    auto it = table.find(degree);
    require(it != table.end(), "degree outside 3..6");
    *out = it->second;
  });
}

}  // extern "C"
