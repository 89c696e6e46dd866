#pragma once

// Constructive 3-divisibility certificates: the contact identity
// s' s'' - s^3 = phi * residual, cusp incidence, and the full verdict.

#include <optional>
#include <string>
#include <vector>

#include "tricusp/families.hpp"
#include "tricusp/singular.hpp"

namespace tricusp {

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  bool identity_ok = false;
  bool identically_zero = false;  // s' s'' - s^3 vanished identically
  int residual_degree = -1;
  std::optional<PolyP> residual;
  std::string note;
};

/// r = s' s'' - s^3 must be phi times a form of degree 6 - deg phi.
/// Throws DegreeMismatch unless deg s' = deg s'' = 3, deg s = 2, deg phi in 4..6.
Certificate contact_identity_check(const PolyP& phi, const PolyP& s1, const PolyP& s2, const PolyP& s);

/// phi = l' l'' f - g^3 exactly. Throws DegreeMismatch on wrong degrees.
Certificate sextic_b_identity_check(const PolyP& phi, const PolyP& l1, const PolyP& l2, const PolyP& g,
                                    const PolyP& f);

/// Dispatch on the instance's certificate kind.
Certificate certificate_check(const SurfaceInstance& inst);

struct Incidence {
  std::vector<bool> per_cusp;            // aligned with the scheme's points
  std::vector<std::size_t> locus_counts;  // aligned with predicted.loci
  bool all() const;
};

/// Contact cubics: every point has s = s' = s'' = 0. Sextic B: every point lies
/// on one of the predicted loci. No certificate: vacuously true.
Incidence cusp_incidence_check(const SurfaceInstance& inst, const SingularScheme& scheme);

/// Evaluates a form at the projective coordinates of a singular point.
bool vanishes_at(const PolyP& f, const SingularPoint& p);
bool in_locus(const Locus& locus, const SingularPoint& p);

/// Principal-part check at a cusp on x0 = x1 = 0 in coordinates (x0, x1, w),
/// w the linear part of whichever of q', q'' vanishes there; weights 1/2, 1/3, 1/2.
bool line_cusp_sqh(const PolyP& phi, const PolyP& q1, const PolyP& q2, const SingularPoint& p);

struct Timings {
  double singular_ms = 0;
  double certificate_ms = 0;
  double total_ms = 0;
};

struct VerificationReport {
  explicit VerificationReport(SurfaceInstance inst) : instance(std::move(inst)) {}

  SurfaceInstance instance;
  std::optional<SingularScheme> scheme;  // absent when the locus computation failed
  Certificate certificate;
  Incidence incidence;
  int expected_cusps = -1;  // minimal count for the degree, -1 outside 3..6
  std::size_t singular_points = 0;
  std::size_t cusps = 0;  // points classified A2
  bool all_a2 = false;
  std::optional<bool> line_cusps_sqh;  // case-3 type only
  std::size_t line_cusps = 0;
  bool self_certifying = false;  // the cubic
  bool pass = false;
  std::vector<std::string> failures;
  Timings timings;
};

struct VerifyOptions {
  std::uint64_t seed = 1;  // solver randomness
};

VerificationReport verify_family(const SurfaceInstance& inst, const VerifyOptions& options = {});

}  // namespace tricusp
