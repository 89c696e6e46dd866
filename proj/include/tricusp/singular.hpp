#pragma once

// Singular points of projective surfaces phi = 0 in P^3 over F_p, computed chart
// by chart over the cells U_c = {x_0 = ... = x_{c-1} = 0, x_c = 1}.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tricusp/solve.hpp"

namespace tricusp {

enum class Classification { A1, A2, Ak, NonADE };

std::string classification_name(Classification c, int tjurina);

/// A1 iff tau = 1; A2 iff tau = 2 and corank 1; tau >= 3 with corank 1 is an
/// aggregate A_k; corank >= 2 is reported as non-ADE/unknown.
Classification classify(int tjurina, int hessian_corank);

struct SingularPoint {
  int chart = 0;
  std::vector<ExtElement> affine;  // coordinates of chart_variables(chart)
  int tjurina = 0;
  int hessian_corank = 0;
  Classification classification = Classification::NonADE;

  int extension_degree() const { return affine.empty() ? 1 : affine[0].degree(); }
  /// Projective coordinates with x_chart = 1.
  std::vector<ExtElement> projective() const;
  /// "[a:b:c:d]" with coordinates in the element text form.
  std::string projective_text() const;
  bool is_rational() const;
};

struct SingularScheme {
  std::array<std::size_t, 4> chart_length{};  // quotient dimension of each cell ideal
  std::size_t total_length = 0;
  std::vector<SingularPoint> points;

  std::size_t count(Classification c) const;
  std::map<int, std::size_t> by_extension_degree() const;
};

/// Dehomogenized partials on {x_c = 1}, plus phi itself when char | deg phi.
IdealP jacobian_ideal_affine_chart(const PolyP& phi, int chart);

/// Cell ideal: the affine-chart ideal plus x_j^N (j < c), N the quotient
/// dimension of the affine-chart ideal. This keeps exactly the local
/// components at points of the cell, so local lengths are preserved.
/// Throws PositiveDimensionalSingularLocus.
IdealP jacobian_ideal_chart(const PolyP& phi, int chart);

struct SingularOptions {
  std::uint64_t seed = 1;
};

SingularScheme find_singular_points(const PolyP& phi, const SingularOptions& options = {});

/// 3 - rank of the Hessian of the dehomogenized equation at the point.
int hessian_corank(const PolyP& phi, int chart, std::span<const ExtElement> affine);

struct LocalInvariants {
  int tjurina;
  int hessian_corank;
};

/// Independent route: Tjurina number as the quotient length of
/// (f, df) + m^N at the origin of the local equation, N increased until stable.
/// Throws NotSingular.
LocalInvariants local_invariants(const PolyP& phi, int chart, std::span<const ExtElement> affine);

/// Weighted degree of a monomial under rational weights.
Rational weighted_degree(const Monomial& m, std::span<const Rational> weights);

/// Lowest weighted-degree part of f.
template <class F>
Poly<F> principal_part(const Poly<F>& f, std::span<const Rational> weights) {
  std::optional<Rational> low;
  for (const auto& t : f.terms()) {
    Rational w = weighted_degree(t.m, weights);
    if (!low || w < *low) low = w;
  }
  std::vector<typename Poly<F>::Term> terms;
  for (const auto& t : f.terms())
    if (weighted_degree(t.m, weights) == *low) terms.push_back(t);
  return Poly<F>::from_terms(f.field(), f.nvars(), f.order(), std::move(terms));
}

/// Semi-quasi-homogeneity test: the principal part under the weights has an
/// isolated critical point (its Jacobian ideal is zero-dimensional).
template <class F>
bool sqh_check(const Poly<F>& local_eq, std::span<const Rational> weights) {
  if (local_eq.is_zero() || static_cast<int>(weights.size()) != local_eq.nvars()) return false;
  for (const auto& w : weights)
    if (!(Rational(0) < w)) return false;
  const Poly<F> f0 = principal_part(local_eq, weights);
  std::vector<Poly<F>> partials;
  for (int v = 0; v < f0.nvars(); ++v) partials.push_back(partial_derivative(f0, v));
  std::erase_if(partials, [](const Poly<F>& g) { return g.is_zero(); });
  if (partials.empty()) return false;
  return quotient_dimension(buchberger(Ideal<F>(std::move(partials)))).has_value();
}

/// Substitutes y_i = sum_j a(i, j) z_j into an affine polynomial.
template <class F>
Poly<F> linear_substitution(const Poly<F>& f, const Matrix<F>& a) {
  const int n = f.nvars();
  std::vector<Poly<F>> images;
  for (int i = 0; i < n; ++i) {
    Poly<F> y(f.field(), n, f.order());
    for (int j = 0; j < n; ++j) y += Poly<F>::monomial(f.field(), n, Monomial::variable(j), a(i, j), f.order());
    images.push_back(std::move(y));
  }
  Poly<F> acc(f.field(), n, f.order());
  for (const auto& t : f.terms()) {
    Poly<F> term = Poly<F>::constant(f.field(), n, t.c, f.order());
    for (int i = 0; i < n; ++i)
      if (t.m.e[i]) term = term * images[i].pow(t.m.e[i]);
    acc += term;
  }
  return acc;
}

}  // namespace tricusp
