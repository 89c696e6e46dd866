#pragma once

// Surface families with a 3-divisible set of cusps, each carried together with
// the polynomials that certify it and the census it is expected to have.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricusp/solve.hpp"

namespace tricusp {

enum class FamilyTag { Cubic3, Quartic6, Quintic2a, QuinticCase3, QuinticDegeneration, SexticA, SexticB, Custom };

std::string family_name(FamilyTag tag);
/// Throws InvalidArgument for unknown names.
FamilyTag parse_family(std::string_view name);
/// The six families run by batch reports.
const std::vector<FamilyTag>& standard_families();

enum class CertificateKind { None, ContactCubics, SexticB };

std::string certificate_kind_name(CertificateKind kind);

struct NamedPoly {
  std::string name;
  PolyP poly;
};

/// Points where every `vanishing` form is zero and no `nonvanishing` form is.
struct Locus {
  std::string description;
  std::vector<PolyP> vanishing;
  std::vector<PolyP> nonvanishing;
  std::optional<int> expected;  // unset: counted and reported only
};

struct PredictedCensus {
  int cusps = 0;
  std::vector<Locus> loci;
};

struct Rejection {
  std::uint64_t draw_seed;
  std::string reason;
};

struct SurfaceInstance {
  explicit SurfaceInstance(PolyP equation) : phi(std::move(equation)) {}

  FamilyTag tag = FamilyTag::Custom;
  PolyP phi;
  CertificateKind kind = CertificateKind::None;
  std::vector<NamedPoly> certificate;  // s', s'', s, residual  or  l', l'', g, f
  std::uint64_t seed = 0;               // requested seed
  std::uint64_t draw_seed = 0;          // seed of the accepted draw
  std::optional<Fp> t;                  // degeneration parameter
  PredictedCensus predicted;
  std::vector<Rejection> rejections;

  int degree() const { return phi.total_degree(); }
  const PrimeField& field() const { return phi.field(); }
  /// nullptr when absent.
  const PolyP* find(std::string_view name) const;
};

inline constexpr int kMaxReseeds = 16;

/// Smallest number of cusps a 3-divisible set can have, by degree.
const std::map<int, int>& minimal_table();

/// One unverified draw. Components are drawn from derive_seed(draw_seed, k)
/// with k fixed per role, so case 3 and the degeneration share their l, q', q''.
SurfaceInstance draw_candidate(FamilyTag tag, std::uint64_t draw_seed, const PrimeField& field,
                               std::optional<Fp> t = std::nullopt);

/// Reseed loop: draws with seed, derive_seed(seed, 1), ... until a draw passes
/// verification; throws DegenerateInstance (ConstructionFailed for the quartic)
/// after kMaxReseeds rejected reseeds.
SurfaceInstance construct(FamilyTag tag, std::uint64_t seed, const PrimeField& field,
                          std::optional<Fp> t = std::nullopt);

SurfaceInstance cubic_three_cusps(const PrimeField& field);
SurfaceInstance quartic_six_cusps(std::uint64_t seed, const PrimeField& field);
SurfaceInstance quintic_2a(std::uint64_t seed, const PrimeField& field);
SurfaceInstance quintic_case3(std::uint64_t seed, const PrimeField& field);
SurfaceInstance quintic_degeneration(std::uint64_t seed, Fp t, const PrimeField& field);
SurfaceInstance sextic_A(std::uint64_t seed, const PrimeField& field);
SurfaceInstance sextic_B(std::uint64_t seed, const PrimeField& field);

/// The product recipe s = ab, s' = a^2 b + rho m', s'' = a b^2 + rho m''.
/// Its identity holds, but the quartic it yields has two cusps and four nodes;
/// kept so the comparison stays testable.
SurfaceInstance quartic_product_ansatz(std::uint64_t seed, const PrimeField& field);

/// A user-supplied surface with no certificate.
SurfaceInstance custom_instance(PolyP phi);

}  // namespace tricusp
