#pragma once

// Agreement between the brute-force scan and the solver on F_q-rational points.

#include "tricusp/families.hpp"
#include "tricusp/oracle.hpp"
#include "tricusp/singular.hpp"

namespace tricusp {

struct CrossCheck {
  bool agree = false;  // equal point sets and scan count <= geometric count
  std::size_t scan_count = 0;
  std::size_t solver_rational = 0;
  std::size_t solver_geometric = 0;
  std::vector<ProjectivePoint> scan_only;
  std::vector<ProjectivePoint> solver_only;
};

/// Rational singular points of the scheme in normalized projective form, ascending.
std::vector<ProjectivePoint> rational_points(const SingularScheme& scheme);

/// The instance must be defined over F_q. Throws like scan_projective and
/// find_singular_points.
CrossCheck cross_check(const SurfaceInstance& inst, std::uint32_t q, const ScanOptions& options = {});

}  // namespace tricusp
