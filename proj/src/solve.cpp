#include "tricusp/solve.hpp"

#include <algorithm>
#include <map>

namespace tricusp {

namespace {

struct MonomialKey {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

UPoly to_upoly(const std::vector<Fp>& c, std::uint32_t p) {
  std::vector<std::uint32_t> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(x.value());
  return UPoly(p, std::move(v));
}

// h(M) by Horner.
Matrix<PrimeField> evaluate_at(const UPoly& h, const Matrix<PrimeField>& m) {
  const PrimeField& f = m.field();
  Matrix<PrimeField> acc(f, m.rows(), m.cols());
  for (int i = h.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += f.from_int(h.coeff(i));
  }
  return acc;
}

Matrix<ExtensionField> lift(const Matrix<PrimeField>& m, const ExtensionField& k) {
  Matrix<ExtensionField> r(k, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = k.embed(m(i, j));
  return r;
}

}  // namespace

Matrix<PrimeField> QuotientAlgebra::multiplication(std::span<const Fp> linear_form) const {
  const PrimeField& f = mult.at(0).field();
  Matrix<PrimeField> acc(f, dimension(), dimension());
  for (std::size_t v = 0; v < mult.size() && v < linear_form.size(); ++v) {
    if (linear_form[v].is_zero()) continue;
    acc = acc + mult[v].scaled(linear_form[v]);
  }
  return acc;
}

QuotientAlgebra quotient_algebra(const IdealP& ideal) { return quotient_algebra(buchberger(ideal)); }

QuotientAlgebra quotient_algebra(const BasisP& gb) {
  auto sm = standard_monomials(gb);
  if (!sm) throw Error(ErrorCode::NotZeroDimensional, "quotient ring is infinite-dimensional");
  QuotientAlgebra qa{gb, std::move(*sm), {}};
  const PrimeField& field = gb.basis.at(0).field();
  const std::size_t d = qa.standard.size();
  std::map<Monomial, std::size_t, MonomialKey> index;
  for (std::size_t i = 0; i < d; ++i) index[qa.standard[i]] = i;
  for (int v = 0; v < gb.nvars; ++v) {
    Matrix<PrimeField> m(field, d, d);
    for (std::size_t b = 0; b < d; ++b) {
      const Monomial prod = qa.standard[b] * Monomial::variable(v);
      PolyP nf(field, gb.nvars, gb.order);
      if (auto it = index.find(prod); it != index.end()) {
        m(it->second, b) = field.one();
        continue;
      }
      nf = normal_form(PolyP::monomial(field, gb.nvars, prod, field.one(), gb.order), gb);
      for (const auto& t : nf.terms()) m(index.at(t.m), b) = t.c;
    }
    qa.mult.push_back(std::move(m));
  }
  return qa;
}

Eliminant eliminate_to_univariate(const IdealP& ideal, std::span<const Fp> direction) {
  const QuotientAlgebra qa = quotient_algebra(ideal);
  const std::uint32_t p = ideal.field().prime();
  if (qa.dimension() == 0) return {UPoly(p, {1}), {direction.begin(), direction.end()}};
  auto chi = characteristic_polynomial(qa.multiplication(direction));
  return {to_upoly(chi, p), {direction.begin(), direction.end()}};
}

Eliminant eliminate_to_univariate(const IdealP& ideal, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Fp> dir;
  for (int v = 0; v < ideal.nvars(); ++v) dir.push_back(ideal.field().random(rng));
  return eliminate_to_univariate(ideal, dir);
}

bool PointWithMultiplicity::is_rational() const {
  return std::all_of(coords.begin(), coords.end(), [](const ExtElement& c) { return c.in_prime_field(); });
}

std::vector<Fp> PointWithMultiplicity::rational_coords() const {
  std::vector<Fp> out;
  for (const auto& c : coords) {
    if (!c.in_prime_field()) throw Error(ErrorCode::InvalidArgument, "point is not rational");
    out.emplace_back(c.coeffs()[0], c.prime());
  }
  return out;
}

bool point_less(const PointWithMultiplicity& a, const PointWithMultiplicity& b) {
  if (a.extension_degree() != b.extension_degree()) return a.extension_degree() < b.extension_degree();
  if (!a.coords.empty() && !b.coords.empty()) {
    const UPoly& ma = a.coords[0].field().modulus();
    const UPoly& mb = b.coords[0].field().modulus();
    if (!(ma == mb)) return ma < mb;
  }
  for (std::size_t i = 0; i < std::min(a.coords.size(), b.coords.size()); ++i) {
    if (a.coords[i].coeffs() != b.coords[i].coeffs()) return a.coords[i].coeffs() < b.coords[i].coeffs();
  }
  return a.multiplicity < b.multiplicity;
}

ExtElement single_eigenvalue(const Matrix<ExtensionField>& m) {
  const ExtensionField& k = m.field();
  const auto chi = characteristic_polynomial(m);
  const std::uint64_t p = k.prime();
  std::uint64_t mult = m.rows(), q = 1;
  int j = 0;
  while (mult % p == 0) {
    mult /= p;
    q *= p;
    ++j;
  }
  // chi = (T^q - a^q)^mult, so the coefficient of T^(q(mult-1)) is -mult * a^q.
  ExtElement aq = -(chi[q * (mult - 1)] / k.from_int(static_cast<std::int64_t>(mult % p)));
  const int e = k.degree();
  for (int r = 0; r < (e - j % e) % e; ++r) aq = aq.frobenius();
  return aq;
}

std::vector<PointWithMultiplicity> solve_points(const IdealP& ideal, const SolveOptions& options) {
  return solve_points(quotient_algebra(ideal), ideal, options);
}

std::vector<PointWithMultiplicity> solve_points(const QuotientAlgebra& qa, const IdealP& ideal,
                                                const SolveOptions& options) {
  const std::size_t dim = qa.dimension();
  if (dim == 0) return {};
  const PrimeField& fp = ideal.field();
  const int n = ideal.nvars();
  Rng rng(options.seed);

  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    std::vector<Fp> dir;
    for (int v = 0; v < n; ++v) dir.push_back(fp.random(rng));
    const Matrix<PrimeField> mu = qa.multiplication(dir);
    const UPoly chi = to_upoly(characteristic_polynomial(mu), fp.prime());

    std::vector<PointWithMultiplicity> points;
    bool separating = true;
    for (const auto& [h, mult] : factor(chi, derive_seed(options.seed, attempt))) {
      const int k = h.degree();
      // Invariant subspace belonging to the factor h^mult, over F_p.
      const KernelBasis<PrimeField> block = kernel(evaluate_at(h, mu).pow(static_cast<unsigned>(mult)));
      if (block.free_rows.size() != static_cast<std::size_t>(k * mult)) {
        separating = false;
        break;
      }
      const ExtensionField field(h);
      const ExtElement theta = field.generator();
      const Matrix<ExtensionField> cu = lift(restrict_to(mu, block), field);
      const KernelBasis<ExtensionField> local = kernel(cu.shifted(theta).pow(static_cast<unsigned>(mult)));
      if (local.free_rows.size() != static_cast<std::size_t>(mult)) {
        separating = false;
        break;
      }
      PointWithMultiplicity pt;
      pt.multiplicity = mult;
      for (int v = 0; v < n; ++v) {
        const Matrix<ExtensionField> cx = restrict_to(lift(restrict_to(qa.mult[v], block), field), local);
        const ExtElement value = single_eigenvalue(cx);
        if (!cx.shifted(value).pow(static_cast<unsigned>(mult)).is_zero()) {
          separating = false;
          break;
        }
        pt.coords.push_back(value);
      }
      if (!separating) break;
      // The direction must take the value theta at the recovered point.
      ExtElement check = field.zero();
      for (int v = 0; v < n; ++v) check += field.embed(dir[v]) * pt.coords[v];
      if (!(check == theta)) {
        separating = false;
        break;
      }
      for (const auto& g : ideal.generators) {
        if (!evaluate(g, field, std::span<const ExtElement>(pt.coords)).is_zero()) {
          throw Error(ErrorCode::DegenerateCoordinates, "recovered point does not satisfy the ideal");
        }
      }
      for (int c = 0; c < k; ++c) {
        points.push_back(pt);
        for (auto& x : pt.coords) x = x.frobenius();
      }
    }
    if (!separating) continue;
    std::sort(points.begin(), points.end(), point_less);
    return points;
  }
  throw Error(ErrorCode::DegenerateCoordinates,
              "no separating linear form found after " + std::to_string(options.max_retries) + " retries");
}

}  // namespace tricusp
