#pragma once

// Zero-dimensional solving over F_p: multiplication matrices on the standard
// monomial basis, a generic-direction eliminant, and point extraction over the
// residue fields F_p[t]/(h) of the eliminant's irreducible factors.

#include <cstdint>
#include <vector>

#include "tricusp/field.hpp"
#include "tricusp/groebner.hpp"
#include "tricusp/linalg.hpp"

namespace tricusp {

using PolyP = Poly<PrimeField>;
using PolyK = Poly<ExtensionField>;
using IdealP = Ideal<PrimeField>;
using BasisP = GroebnerBasis<PrimeField>;

/// Multiplication by each variable on the quotient ring, in the standard monomial basis.
struct QuotientAlgebra {
  BasisP basis;
  std::vector<Monomial> standard;
  std::vector<Matrix<PrimeField>> mult;  // one per variable

  std::size_t dimension() const { return standard.size(); }
  Matrix<PrimeField> multiplication(std::span<const Fp> linear_form) const;
};

/// Throws NotZeroDimensional when the quotient is infinite.
QuotientAlgebra quotient_algebra(const IdealP& ideal);
QuotientAlgebra quotient_algebra(const BasisP& basis);

struct Eliminant {
  UPoly polynomial;           // characteristic polynomial of the direction
  std::vector<Fp> direction;  // coefficients of the linear form
};

/// Roots (with multiplicity) are the values of the linear form on the variety.
Eliminant eliminate_to_univariate(const IdealP& ideal, std::span<const Fp> direction);
/// Same with a seeded random direction.
Eliminant eliminate_to_univariate(const IdealP& ideal, std::uint64_t seed);

struct PointWithMultiplicity {
  std::vector<ExtElement> coords;
  int multiplicity = 1;

  int extension_degree() const { return coords.empty() ? 1 : coords[0].degree(); }
  bool is_rational() const;
  /// Coordinates in F_p; requires is_rational().
  std::vector<Fp> rational_coords() const;
};

/// Strict weak order used for deterministic point listings.
bool point_less(const PointWithMultiplicity& a, const PointWithMultiplicity& b);

struct SolveOptions {
  std::uint64_t seed = 1;
  int max_retries = 8;
};

/// All geometric points, conjugates listed individually, sum of multiplicities
/// equal to the quotient dimension. Throws NotZeroDimensional or
/// DegenerateCoordinates.
std::vector<PointWithMultiplicity> solve_points(const IdealP& ideal, const SolveOptions& options = {});
std::vector<PointWithMultiplicity> solve_points(const QuotientAlgebra& algebra, const IdealP& ideal,
                                                const SolveOptions& options = {});

/// Unique eigenvalue of a matrix whose characteristic polynomial is (T - a)^m.
ExtElement single_eigenvalue(const Matrix<ExtensionField>& m);

}  // namespace tricusp
