#pragma once

// Sparse multivariate polynomials in 3 (affine) or 4 (projective) variables.
// Terms are kept strictly descending in the ring's monomial order with no zero
// coefficients; every public operation returns a normalized polynomial.

#include <algorithm>
#include <cassert>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricusp/error.hpp"
#include "tricusp/field.hpp"
#include "tricusp/monomial.hpp"
#include "tricusp/rng.hpp"

namespace tricusp {

template <class F>
class Poly {
 public:
  using Field = F;
  using Element = typename F::Element;

  struct Term {
    Monomial m;
    Element c;
    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
  };

  Poly(F field, int nvars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > 4) throw Error(ErrorCode::InvalidArgument, "polynomial rings have 1..4 variables");
  }

  static Poly constant(const F& field, int nvars, const Element& c, MonomialOrder order = MonomialOrder::grevlex()) {
    Poly r(field, nvars, order);
    if (!c.is_zero()) r.terms_.push_back({Monomial{}, c});
    return r;
  }
  static Poly variable(const F& field, int nvars, int index, MonomialOrder order = MonomialOrder::grevlex()) {
    return monomial(field, nvars, Monomial::variable(index), field.one(), order);
  }
  static Poly monomial(const F& field, int nvars, const Monomial& m, const Element& c,
                       MonomialOrder order = MonomialOrder::grevlex()) {
    Poly r(field, nvars, order);
    if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
  }
  /// Sorts and combines arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(const F& field, int nvars, MonomialOrder order, std::vector<Term> terms) {
    Poly r(field, nvars, order);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.cmp(a.m, b.m) > 0; });
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().m == t.m) {
        r.terms_.back().c += t.c;
        if (r.terms_.back().c.is_zero()) r.terms_.pop_back();
      } else if (!t.c.is_zero()) {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }
  const Term& lead() const {
    assert(!terms_.empty());
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().m; }
  const Element& lead_coefficient() const { return lead().c; }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().m.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.m.degree() == d; });
  }
  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.m == m) return t.c;
    return field_.zero();
  }

  /// Invariant check: strictly descending, nonzero coefficients, unused variables absent.
  bool normalized() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].c.is_zero()) return false;
      for (int v = nvars_; v < 4; ++v)
        if (terms_[i].m.e[v] != 0) return false;
      if (i > 0 && cmp(terms_[i - 1].m, terms_[i].m) <= 0) return false;
    }
    return true;
  }

  Poly operator+(const Poly& o) const { return merge(o, field_.one(), Monomial{}); }
  Poly operator-(const Poly& o) const { return merge(o, -field_.one(), Monomial{}); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator*(const Poly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(field_, nvars_, order_);
    if (o.size() == 1) return times_term(o.terms_[0].m, o.terms_[0].c);
    if (size() == 1) return o.times_term(terms_[0].m, terms_[0].c);
    std::vector<Term> prods;
    prods.reserve(size() * o.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prods.push_back({a.m * b.m, a.c * b.c});
    return from_terms(field_, nvars_, order_, std::move(prods));
  }

  Poly scaled(const Element& c) const {
    if (c.is_zero()) return Poly(field_, nvars_, order_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c = t.c * c;
    return r;
  }
  Poly times_term(const Monomial& m, const Element& c) const {
    if (c.is_zero()) return Poly(field_, nvars_, order_);
    Poly r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
  }
  /// this - c * m * g in a single merge pass.
  Poly minus_term_times(const Poly& g, const Monomial& m, const Element& c) const { return merge(g, -c, m); }

  Poly pow(unsigned e) const {
    Poly result = constant(field_, nvars_, field_.one(), order_);
    Poly base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Drops the leading term.
  Poly tail() const {
    Poly r(field_, nvars_, order_);
    if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coefficient().inverse());
  }

  Poly with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return from_terms(field_, nvars_, order, terms_);
  }

  Poly homogeneous_part(int degree) const {
    Poly r(field_, nvars_, order_);
    for (const auto& t : terms_)
      if (t.m.degree() == degree) r.terms_.push_back(t);
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && same_terms(o);
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars_); }

  void check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial rings differ");
    if (!(order_ == o.order_)) throw Error(ErrorCode::FieldMismatch, "monomial orders differ");
  }

  bool same_terms(const Poly& o) const {
    if (order_ == o.order_) return terms_ == o.terms_;
    return terms_ == o.with_order(order_).terms_;
  }

  // this + c * m * g, both operands sorted in the same order.
  Poly merge(const Poly& g, const Element& c, const Monomial& m) const {
    check_compatible(g);
    Poly r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      const Monomial gm = g.terms_[j].m * m;
      const int s = cmp(terms_[i].m, gm);
      if (s > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (s < 0) {
        r.terms_.push_back({gm, g.terms_[j++].c * c});
      } else {
        Element v = terms_[i].c + g.terms_[j].c * c;
        if (!v.is_zero()) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back({g.terms_[j].m * m, g.terms_[j].c * c});
    return r;
  }

  F field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------

template <class F>
Poly<F> partial_derivative(const Poly<F>& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::InvalidArgument, "derivative variable out of range");
  std::vector<typename Poly<F>::Term> terms;
  for (const auto& t : f.terms()) {
    const int e = t.m.e[var];
    if (e == 0) continue;
    Monomial m = t.m;
    m.e[var] = static_cast<std::uint16_t>(e - 1);
    terms.push_back({m, t.c * f.field().from_int(e)});
  }
  return Poly<F>::from_terms(f.field(), f.nvars(), f.order(), std::move(terms));
}

template <class F>
struct DivisionResult {
  Poly<F> quotient;
  Poly<F> remainder;
  bool exact;
};

/// Multivariate division by a single divisor; exact iff the remainder is zero.
template <class F>
DivisionResult<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "exact_div by zero polynomial");
  if (b.nvars() != a.nvars() || !(b.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "exact_div operands");
  const Poly<F> divisor = b.with_order(a.order());
  const auto& lt = divisor.lead();
  const auto inv = lt.c.inverse();
  Poly<F> p = a;
  std::vector<typename Poly<F>::Term> q, rem;
  while (!p.is_zero()) {
    const auto& t = p.lead();
    if (lt.m.divides(t.m)) {
      const Monomial m = t.m / lt.m;
      const auto c = t.c * inv;
      q.push_back({m, c});
      p = p.minus_term_times(divisor, m, c);
    } else {
      rem.push_back(t);
      p = p.tail();
    }
  }
  DivisionResult<F> r{Poly<F>::from_terms(a.field(), a.nvars(), a.order(), std::move(q)),
                      Poly<F>::from_terms(a.field(), a.nvars(), a.order(), std::move(rem)), false};
  r.exact = r.remainder.is_zero();
  return r;
}

/// Re-expresses f with coefficients mapped into another field.
template <class G, class F>
Poly<G> map_coefficients(const Poly<F>& f, const G& target) {
  std::vector<typename Poly<G>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.m, Embed<G>::apply(target, t.c)});
  return Poly<G>::from_terms(target, f.nvars(), f.order(), std::move(terms));
}

/// Evaluates f at a point with coordinates in G (coefficients are embedded).
template <class G, class F>
typename G::Element evaluate(const Poly<F>& f, const G& target, std::span<const typename G::Element> point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw Error(ErrorCode::FieldMismatch, "point arity differs from ring arity");
  int maxdeg = 0;
  for (const auto& t : f.terms())
    for (int i = 0; i < f.nvars(); ++i) maxdeg = std::max<int>(maxdeg, t.m.e[i]);
  std::vector<std::vector<typename G::Element>> powers(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    powers[i].reserve(maxdeg + 1);
    powers[i].push_back(target.one());
    for (int k = 1; k <= maxdeg; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  typename G::Element acc = target.zero();
  for (const auto& t : f.terms()) {
    typename G::Element v = Embed<G>::apply(target, t.c);
    for (int i = 0; i < f.nvars(); ++i)
      if (t.m.e[i]) v = v * powers[i][t.m.e[i]];
    acc = acc + v;
  }
  return acc;
}

template <class F>
typename F::Element evaluate(const Poly<F>& f, std::span<const typename F::Element> point) {
  return evaluate<F, F>(f, f.field(), point);
}

/// Affine variables of chart c: the projective indices other than c, in order.
inline std::array<int, 3> chart_variables(int chart) {
  std::array<int, 3> v{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != chart) v[k++] = i;
  return v;
}

/// Sets x_c = 1 in a four-variable polynomial; result lives in 3 variables.
template <class F>
Poly<F> dehomogenize(const Poly<F>& f, int chart) {
  if (f.nvars() != 4) throw Error(ErrorCode::InvalidArgument, "dehomogenize expects a projective polynomial");
  if (chart < 0 || chart > 3) throw Error(ErrorCode::InvalidArgument, "chart index out of range");
  const auto vars = chart_variables(chart);
  std::vector<typename Poly<F>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int k = 0; k < 3; ++k) m.e[k] = t.m.e[vars[k]];
    terms.push_back({m, t.c});
  }
  return Poly<F>::from_terms(f.field(), 3, f.order(), std::move(terms));
}

/// Substitutes x_i -> x_i + shift_i (coefficients embedded into G).
template <class G, class F>
Poly<G> translate(const Poly<F>& f, const G& target, std::span<const typename G::Element> shift) {
  const int n = f.nvars();
  if (static_cast<int>(shift.size()) != n) throw Error(ErrorCode::InvalidArgument, "translation arity");
  std::vector<std::vector<Poly<G>>> powers(n);
  int maxdeg = 0;
  for (const auto& t : f.terms())
    for (int i = 0; i < n; ++i) maxdeg = std::max<int>(maxdeg, t.m.e[i]);
  for (int i = 0; i < n; ++i) {
    const Poly<G> lin = Poly<G>::variable(target, n, i, f.order()) + Poly<G>::constant(target, n, shift[i], f.order());
    powers[i].push_back(Poly<G>::constant(target, n, target.one(), f.order()));
    for (int k = 1; k <= maxdeg; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  Poly<G> acc(target, n, f.order());
  for (const auto& t : f.terms()) {
    Poly<G> term = Poly<G>::constant(target, n, Embed<G>::apply(target, t.c), f.order());
    for (int i = 0; i < n; ++i)
      if (t.m.e[i]) term = term * powers[i][t.m.e[i]];
    acc += term;
  }
  return acc;
}

/// Local equation of homogeneous f at an affine point of chart c, moved to the origin.
template <class G, class F>
Poly<G> localize(const Poly<F>& f, int chart, const G& target, std::span<const typename G::Element> point) {
  if (!f.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "localize expects a homogeneous polynomial");
  return translate(dehomogenize(f, chart), target, point);
}

/// As above from projective coordinates; throws PointNotInChart when x_c = 0.
template <class G, class F>
Poly<G> localize_projective(const Poly<F>& f, int chart, const G& target,
                            std::span<const typename G::Element> projective) {
  if (projective.size() != 4) throw Error(ErrorCode::InvalidArgument, "projective point needs 4 coordinates");
  if (projective[chart].is_zero()) throw Error(ErrorCode::PointNotInChart, "x" + std::to_string(chart) + " = 0");
  const auto inv = projective[chart].inverse();
  std::vector<typename G::Element> affine;
  for (int i : chart_variables(chart)) affine.push_back(projective[i] * inv);
  return localize(f, chart, target, std::span<const typename G::Element>(affine));
}

/// All monomials of the given degree in nvars variables, lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Homogeneous polynomial in 4 variables with every coefficient drawn uniformly.
template <class F>
Poly<F> random_homogeneous(int degree, std::uint64_t seed, const F& field, int nvars = 4) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  Rng rng(seed);
  std::vector<typename Poly<F>::Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) terms.push_back({m, field.random(rng)});
  return Poly<F>::from_terms(field, nvars, MonomialOrder::grevlex(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Text form:  term ::= [coef]['*'] monom | coef ;  monom ::= var('^'int)?('*'var('^'int)?)*
// var in {x0,x1,x2,x3} (projective ring) or {x,y,z} (affine ring).

/// Parsed coefficients stay rational until mapped into a field.
struct ParsedPoly {
  int nvars;  // 4 projective, 3 affine
  std::vector<std::pair<Monomial, Rational>> terms;
};

/// nvars 0 auto-detects from the variable names (constants default to 4).
ParsedPoly parse_terms(const std::string& text, int nvars = 0);

template <class F>
Poly<F> parse_poly(const std::string& text, const F& field, int nvars = 0) {
  ParsedPoly pp = parse_terms(text, nvars);
  std::vector<typename Poly<F>::Term> terms;
  for (auto& [m, c] : pp.terms) terms.push_back({m, field.from_rational(c)});
  return Poly<F>::from_terms(field, pp.nvars, MonomialOrder::grevlex(), std::move(terms));
}

std::string coefficient_text(const Fp& c, bool& negative);
std::string coefficient_text(const Rational& c, bool& negative);
std::string coefficient_text(const ExtElement& c, bool& negative);

std::string variable_name(int nvars, int index);

/// Grammar text; names overrides the default variable names.
template <class F>
std::string format_poly(const Poly<F>& f, std::span<const std::string> names = {}) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = false;
    std::string c = coefficient_text(t.c, negative);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.empty() ? variable_name(f.nvars(), i) : names[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace tricusp
