#pragma once

// JSON forms of instances, censuses and verification reports. The layout is
// described by schema/report.schema.json; kSchemaVersion tracks it.

#include <string>

#include "json.hpp"

#include "tricusp/certify.hpp"
#include "tricusp/crosscheck.hpp"

namespace tricusp {

inline constexpr const char* kSchemaVersion = "1.0";

const char* tool_version();

nlohmann::json instance_to_json(const SurfaceInstance& inst);
/// Throws SyntaxError / InvalidArgument on malformed input.
SurfaceInstance instance_from_json(const nlohmann::json& j);

nlohmann::json scheme_to_json(const SingularScheme& scheme);
/// p is the characteristic of the surface the census belongs to.
SingularScheme scheme_from_json(const nlohmann::json& j, std::uint32_t p);

/// include_timings = false gives output that is identical across reruns.
nlohmann::json report_to_json(const VerificationReport& report, bool include_timings = true);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json scan_to_json(const ScanResult& scan);
nlohmann::json cross_check_to_json(const CrossCheck& cc);

/// "[0:1:0:0]"
std::string point_text(const ProjectivePoint& p);

}  // namespace tricusp
