#pragma once

// Brute-force singular points over P^3(F_q). The scan only evaluates
// polynomials; it shares no code with the Groebner engine.

#include <array>
#include <cstdint>
#include <vector>

#include "tricusp/poly.hpp"

namespace tricusp {

using ProjectivePoint = std::array<std::uint32_t, 4>;  // first nonzero coordinate is 1

inline constexpr std::uint32_t kMaxOraclePrime = 257;

struct ScanResult {
  std::uint32_t q = 0;
  std::uint64_t scanned = 0;  // q^3 + q^2 + q + 1
  std::vector<ProjectivePoint> points;  // ascending
  /// Per point: the four partials followed by phi, all zero (kept for audit).
  std::vector<std::array<std::uint32_t, 5>> evaluations;
};

struct ScanOptions {
  unsigned jobs = 1;
};

/// phi must have coefficients in F_q. Throws InvalidField unless q is a prime
/// in 5..257 (FieldTooLarge above), FieldMismatch when phi lives elsewhere.
ScanResult scan_projective(const Poly<PrimeField>& phi, std::uint32_t q, const ScanOptions& options = {});

/// All partials (and phi) vanish at the point.
bool is_singular_at(const Poly<PrimeField>& phi, const ProjectivePoint& point);

}  // namespace tricusp
