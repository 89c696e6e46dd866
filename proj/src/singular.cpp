#include "tricusp/singular.hpp"

#include <algorithm>

namespace tricusp {

std::string classification_name(Classification c, int tjurina) {
  switch (c) {
    case Classification::A1: return "A1";
    case Classification::A2: return "A2";
    case Classification::Ak: return "A" + std::to_string(tjurina);
    case Classification::NonADE: return "non-ADE/unknown";
  }
  return "?";
}

Classification classify(int tjurina, int hessian_corank) {
  if (hessian_corank >= 2) return Classification::NonADE;
  if (tjurina == 1 && hessian_corank == 0) return Classification::A1;
  if (hessian_corank != 1) return Classification::NonADE;
  if (tjurina == 2) return Classification::A2;
  if (tjurina >= 3) return Classification::Ak;
  return Classification::NonADE;
}

std::vector<ExtElement> SingularPoint::projective() const {
  std::vector<ExtElement> out(4);
  const ExtensionField k = affine.at(0).field();
  const auto vars = chart_variables(chart);
  out[chart] = k.one();
  for (int i = 0; i < 3; ++i) out[vars[i]] = affine[i];
  return out;
}

std::string SingularPoint::projective_text() const {
  std::string out = "[";
  const auto pr = projective();
  for (std::size_t i = 0; i < pr.size(); ++i) out += (i ? ":" : "") + pr[i].to_string();
  return out + "]";
}

bool SingularPoint::is_rational() const {
  return std::all_of(affine.begin(), affine.end(), [](const ExtElement& x) { return x.in_prime_field(); });
}

std::size_t SingularScheme::count(Classification c) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [c](const SingularPoint& p) { return p.classification == c; }));
}

std::map<int, std::size_t> SingularScheme::by_extension_degree() const {
  std::map<int, std::size_t> out;
  for (const auto& p : points) ++out[p.extension_degree()];
  return out;
}

IdealP jacobian_ideal_affine_chart(const PolyP& phi, int chart) {
  if (phi.nvars() != 4 || !phi.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "expected a homogeneous quaternary form");
  if (phi.total_degree() < 2) throw Error(ErrorCode::InvalidArgument, "surface degree must be at least 2");
  std::vector<PolyP> gens;
  for (int v = 0; v < 4; ++v) gens.push_back(dehomogenize(partial_derivative(phi, v), chart));
  if (phi.total_degree() % phi.field().prime() == 0) gens.push_back(dehomogenize(phi, chart));
  std::erase_if(gens, [](const PolyP& g) { return g.is_zero(); });
  if (gens.empty()) throw Error(ErrorCode::PositiveDimensionalSingularLocus, "all partial derivatives vanish");
  return IdealP(std::move(gens));
}

namespace {

struct ChartIdeal {
  IdealP ideal;
  BasisP basis;
};

ChartIdeal cell_ideal(const PolyP& phi, int chart) {
  IdealP affine = jacobian_ideal_affine_chart(phi, chart);
  BasisP gb = buchberger(affine);
  const auto dim = quotient_dimension(gb);
  if (!dim) {
    throw Error(ErrorCode::PositiveDimensionalSingularLocus,
                "singular locus is positive-dimensional in chart x" + std::to_string(chart) + " = 1");
  }
  if (chart == 0 || *dim == 0) return {std::move(affine), std::move(gb)};
  std::vector<PolyP> gens = affine.generators;
  const PrimeField& f = phi.field();
  for (int j = 0; j < chart; ++j) {
    gens.push_back(PolyP::monomial(f, 3, Monomial::variable(j, static_cast<int>(*dim)), f.one()));
  }
  IdealP cell(std::move(gens));
  BasisP cell_gb = buchberger(cell);
  return {std::move(cell), std::move(cell_gb)};
}

}  // namespace

IdealP jacobian_ideal_chart(const PolyP& phi, int chart) { return cell_ideal(phi, chart).ideal; }

int hessian_corank(const PolyP& phi, int chart, std::span<const ExtElement> affine) {
  const PolyP f = dehomogenize(phi, chart);
  const ExtensionField k = affine[0].field();
  Matrix<ExtensionField> h(k, 3, 3);
  for (int i = 0; i < 3; ++i) {
    const PolyP fi = partial_derivative(f, i);
    for (int j = i; j < 3; ++j) {
      h(i, j) = evaluate(partial_derivative(fi, j), k, affine);
      h(j, i) = h(i, j);
    }
  }
  return 3 - static_cast<int>(rank(h));
}

SingularScheme find_singular_points(const PolyP& phi, const SingularOptions& options) {
  SingularScheme scheme;
  for (int c = 0; c < 4; ++c) {
    ChartIdeal ci = cell_ideal(phi, c);
    const QuotientAlgebra qa = quotient_algebra(ci.basis);
    scheme.chart_length[c] = qa.dimension();
    scheme.total_length += qa.dimension();
    if (qa.dimension() == 0) continue;
    SolveOptions so;
    so.seed = derive_seed(options.seed, static_cast<std::uint64_t>(c));
    for (auto& pt : solve_points(qa, ci.ideal, so)) {
      SingularPoint sp;
      sp.chart = c;
      sp.affine = std::move(pt.coords);
      sp.tjurina = pt.multiplicity;
      sp.hessian_corank = hessian_corank(phi, c, sp.affine);
      sp.classification = classify(sp.tjurina, sp.hessian_corank);
      scheme.points.push_back(std::move(sp));
    }
  }
  return scheme;
}

LocalInvariants local_invariants(const PolyP& phi, int chart, std::span<const ExtElement> affine) {
  const ExtensionField k = affine[0].field();
  const PolyK g = localize(phi, chart, k, affine);
  std::vector<PolyK> base{g};
  for (int v = 0; v < 3; ++v) base.push_back(partial_derivative(g, v));
  std::erase_if(base, [](const PolyK& x) { return x.is_zero(); });
  if (base.empty()) throw Error(ErrorCode::PositiveDimensionalSingularLocus, "local equation vanishes identically");
  auto length_with_power = [&](int n) -> std::size_t {
    std::vector<PolyK> gens = base;
    for (const auto& m : monomials_of_degree(3, n)) gens.push_back(PolyK::monomial(k, 3, m, k.one()));
    return *quotient_dimension(buchberger(Ideal<ExtensionField>(std::move(gens))));
  };
  std::size_t prev = length_with_power(1);
  if (prev == 0) throw Error(ErrorCode::NotSingular, "point is not a singular point of the surface");
  for (int n = 2;; ++n) {
    const std::size_t cur = length_with_power(n);
    if (cur == prev) {
      return {static_cast<int>(cur), hessian_corank(phi, chart, affine)};
    }
    prev = cur;
  }
}

Rational weighted_degree(const Monomial& m, std::span<const Rational> weights) {
  Rational w(0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (m.e[i]) w += weights[i] * Rational(static_cast<long>(m.e[i]));
  return w;
}

}  // namespace tricusp
