#pragma once

// Buchberger's algorithm with Gebauer-Moeller pair elimination and the sugar
// selection strategy; returns reduced bases.

#include <algorithm>
#include <optional>
#include <vector>

#include "tricusp/error.hpp"
#include "tricusp/poly.hpp"

namespace tricusp {

template <class F>
struct Ideal {
  std::vector<Poly<F>> generators;

  explicit Ideal(std::vector<Poly<F>> gens) : generators(std::move(gens)) {
    std::erase_if(generators, [](const Poly<F>& g) { return g.is_zero(); });
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs a nonzero generator");
    for (const auto& g : generators)
      if (g.nvars() != generators[0].nvars() || !(g.field() == generators[0].field()))
        throw Error(ErrorCode::FieldMismatch, "ideal generators live in different rings");
  }
  int nvars() const { return generators[0].nvars(); }
  const F& field() const { return generators[0].field(); }
};

template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> basis;  // monic, interreduced, ascending by leading monomial
  MonomialOrder order;
  int nvars;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

namespace detail {

template <class F>
const Poly<F>* find_reducer(const Monomial& m, const std::vector<const Poly<F>*>& reducers) {
  for (const auto* g : reducers)
    if (g->lead_monomial().divides(m)) return g;
  return nullptr;
}

/// Full reduction of f modulo the reducers (all monic).
template <class F>
Poly<F> reduce(Poly<F> f, const std::vector<const Poly<F>*>& reducers) {
  std::vector<typename Poly<F>::Term> rem;
  while (!f.is_zero()) {
    const auto& t = f.lead();
    if (const auto* g = find_reducer<F>(t.m, reducers)) {
      f = f.minus_term_times(*g, t.m / g->lead_monomial(), t.c);
    } else {
      rem.push_back(t);
      f = f.tail();
    }
  }
  return Poly<F>::from_terms(f.field(), f.nvars(), f.order(), std::move(rem));
}

template <class F>
Poly<F> s_polynomial(const Poly<F>& a, const Poly<F>& b) {
  const Monomial l = lcm(a.lead_monomial(), b.lead_monomial());
  const auto ca = b.lead_coefficient();
  const auto cb = a.lead_coefficient();
  // ca*(l/lt a)*a - cb*(l/lt b)*b
  return a.times_term(l / a.lead_monomial(), ca).minus_term_times(b, l / b.lead_monomial(), cb);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, MonomialOrder order = MonomialOrder::grevlex()) {
  using P = Poly<F>;
  const int n = ideal.nvars();
  std::vector<P> polys;
  std::vector<int> sugar;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;

  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, n); };
  auto reducers = [&]() {
    std::vector<const P*> r;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) r.push_back(&polys[k]);
    return r;
  };

  // Gebauer-Moeller update with the new element h = polys.back().
  auto update = [&]() {
    const std::size_t h = polys.size() - 1;
    const Monomial lh = polys[h].lead_monomial();
    std::vector<detail::Pair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active[g]) continue;
      const Monomial l = lcm(lh, polys[g].lead_monomial());
      const int s = std::max(sugar[h] + l.degree() - lh.degree(),
                             sugar[g] + l.degree() - polys[g].lead_monomial().degree());
      fresh.push_back({g, h, l, s});
    }
    // Chain criterion among new pairs: drop (g,h) when another new lcm properly divides it.
    std::vector<detail::Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) drop = true;
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const detail::Pair& p) { return polys[p.i].lead_monomial().coprime(lh); });
    // Old pairs made redundant by h.
    std::erase_if(pairs, [&](const detail::Pair& p) {
      return lh.divides(p.lcm) && lcm(polys[p.i].lead_monomial(), lh) != p.lcm &&
             lcm(polys[p.j].lead_monomial(), lh) != p.lcm;
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].lead_monomial())) active[g] = false;
  };

  auto insert = [&](P f, int s) {
    polys.push_back(f.monic());
    sugar.push_back(s);
    active.push_back(true);
    update();
  };

  // Seed with the reduced generators, smallest first.
  std::vector<P> gens;
  for (const auto& g : ideal.generators) gens.push_back(g.with_order(order));
  std::sort(gens.begin(), gens.end(), [&](const P& a, const P& b) { return cmp(a.lead_monomial(), b.lead_monomial()) < 0; });
  for (auto& g : gens) {
    P r = detail::reduce(g, reducers());
    if (r.is_zero()) continue;
    if (r.is_constant()) return {{P::constant(ideal.field(), n, ideal.field().one(), order)}, order, n};
    insert(std::move(r), g.total_degree());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const detail::Pair& a, const detail::Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const int c = cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const detail::Pair pr = *best;
    pairs.erase(best);
    P r = detail::reduce(detail::s_polynomial(polys[pr.i], polys[pr.j]), reducers());
    if (r.is_zero()) continue;
    if (r.is_constant()) return {{P::constant(ideal.field(), n, ideal.field().one(), order)}, order, n};
    insert(std::move(r), pr.sugar);
  }

  // Minimalize, interreduce, sort ascending.
  std::vector<P> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<P> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const P*> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(&minimal[o]);
    P head = P::monomial(minimal[k].field(), n, minimal[k].lead_monomial(), minimal[k].lead_coefficient(), order);
    reduced.push_back((head + detail::reduce(minimal[k].tail(), others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const P& a, const P& b) { return cmp(a.lead_monomial(), b.lead_monomial()) < 0; });
  return {std::move(reduced), order, n};
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& gb) {
  std::vector<const Poly<F>*> r;
  for (const auto& g : gb.basis) r.push_back(&g);
  return detail::reduce(f.with_order(gb.order), r);
}

template <class F>
bool ideal_membership(const Poly<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb).is_zero();
}

/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
template <class F>
bool s_polynomials_reduce(const GroebnerBasis<F>& gb) {
  std::vector<const Poly<F>*> r;
  for (const auto& g : gb.basis) r.push_back(&g);
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!detail::reduce(detail::s_polynomial(gb.basis[i], gb.basis[j]), r).is_zero()) return false;
  return true;
}

/// Reduced basis invariant: monic and no term of any element divisible by another element's lead.
template <class F>
bool is_reduced(const GroebnerBasis<F>& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (!gb.basis[i].lead_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.basis[i].terms())
        if (gb.basis[j].lead_monomial().divides(t.m)) return false;
    }
  }
  return true;
}

/// Monomials outside the leading-term ideal, or nullopt when there are infinitely many.
template <class F>
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis<F>& gb) {
  const int n = gb.nvars;
  if (gb.is_unit()) return std::vector<Monomial>{};
  std::array<int, 4> bound{};
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (const auto& g : gb.basis) {
      const Monomial& m = g.lead_monomial();
      if (m.degree() == m.e[v] && m.e[v] > 0 && (best < 0 || m.e[v] < best)) best = m.e[v];
    }
    if (best < 0) return std::nullopt;
    bound[v] = best;
  }
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (const auto& g : gb.basis)
        if (g.lead_monomial().divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      m.e[v] = static_cast<std::uint16_t>(e);
      self(self, v + 1);
    }
    m.e[v] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return gb.order.compare(a, b, n) < 0; });
  return out;
}

/// Vector-space dimension of the quotient ring; nullopt means infinite.
template <class F>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<F>& gb) {
  auto sm = standard_monomials(gb);
  if (!sm) return std::nullopt;
  return sm->size();
}

}  // namespace tricusp
