#pragma once

// Exact coefficient fields: the rationals, prime fields F_p (p < 2^31) and
// extension fields F_p[t]/(m(t)) for a monic irreducible m.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "tricusp/error.hpp"
#include "tricusp/rng.hpp"

namespace tricusp {

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Rationals

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  Rational inverse() const;

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }

  /// Canonical form: gcd(|num|, den) = 1 and den > 0.
  bool normalized() const;
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(std::int64_t n) const { return Rational(mpz_class(std::to_string(n)), mpz_class(1)); }
  Element from_rational(const Rational& r) const { return r; }
  /// Small random integers; the rationals have no uniform distribution.
  Element random(Rng& rng) const { return Rational(static_cast<long>(rng.below(201)) - 100); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }
  bool operator==(const RationalField&) const { return true; }
};

// ---------------------------------------------------------------------------
// Prime fields

class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(Fp o) const {
    check(o);
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  Fp operator-(Fp o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator*(Fp o) const {
    check(o);
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  bool operator==(Fp o) const { return v_ == o.v_ && p_ == o.p_; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;
  std::string to_string() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void check(Fp o) const {
    if (p_ != o.p_) throw Error(ErrorCode::IncompatibleFields, "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

class PrimeField {
 public:
  using Element = Fp;

  /// Requires p prime and p < 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(std::int64_t n) const;
  /// Throws ZeroInverse when p divides the denominator.
  Element from_rational(const Rational& r) const;
  Element random(Rng& rng) const { return Fp(rng.below(p_), p_); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over F_p (coefficient i multiplies t^i).

class UPoly {
 public:
  explicit UPoly(std::uint32_t p) : p_(p) {}
  UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static UPoly monomial(std::uint32_t p, std::uint32_t coeff, int degree);
  static UPoly variable(std::uint32_t p) { return monomial(p, 1, 1); }

  std::uint32_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator/(const UPoly& o) const { return divmod(o).first; }
  UPoly operator%(const UPoly& o) const { return divmod(o).second; }
  UPoly scaled(std::uint32_t s) const;
  bool operator==(const UPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator<(const UPoly& o) const;  // degree, then coefficients from the top

  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;
  UPoly derivative() const;
  std::uint32_t eval(std::uint32_t x) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly powmod(const UPoly& base, const mpz_class& exponent, const UPoly& modulus);
/// Rabin-style test: f has no irreducible factor of degree <= deg f / 2.
bool is_irreducible(const UPoly& f);
/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<UPoly, int>> factor(const UPoly& f, std::uint64_t seed = 0);
std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& f);
/// Pairs (product of all irreducible factors of degree d, d) for squarefree monic f.
std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f);
/// Splits a squarefree monic product of irreducibles of degree d (Cantor-Zassenhaus, odd p).
std::vector<UPoly> equal_degree_factorization(const UPoly& f, int d, Rng& rng);

/// Monic irreducible of degree k. seed 0 scans candidates lexicographically
/// (low coefficients vary fastest); other seeds draw seeded random candidates.
UPoly find_irreducible(std::uint32_t p, int k, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Extension fields F_p[t]/(modulus)

class ExtensionField;

class ExtElement {
 public:
  ExtElement() = default;

  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  std::uint32_t prime() const;
  int degree() const;
  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const;

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator/(const ExtElement& o) const { return *this * o.inverse(); }
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }
  bool operator==(const ExtElement& o) const;
  bool operator<(const ExtElement& o) const { return c_ < o.c_; }

  ExtElement inverse() const;
  ExtElement pow(const mpz_class& e) const;
  ExtElement frobenius() const;  // x -> x^p
  std::string to_string() const;
  ExtensionField field() const;

 private:
  friend class ExtensionField;
  struct Desc;
  ExtElement(std::shared_ptr<const Desc> d, std::vector<std::uint32_t> c) : d_(std::move(d)), c_(std::move(c)) {}
  void check(const ExtElement& o) const;

  std::shared_ptr<const Desc> d_;
  std::vector<std::uint32_t> c_;  // length = extension degree
};

struct ExtElement::Desc {
  std::uint32_t p;
  UPoly modulus;
};

inline std::ostream& operator<<(std::ostream& os, const ExtElement& a) { return os << a.to_string(); }

class ExtensionField {
 public:
  using Element = ExtElement;

  /// modulus must be monic and irreducible over F_p (verified).
  explicit ExtensionField(const UPoly& modulus);
  /// F_{p^k} with the modulus chosen by find_irreducible(p, k, seed).
  static ExtensionField of_degree(std::uint32_t p, int k, std::uint64_t seed = 0);

  std::uint32_t prime() const { return d_->p; }
  std::uint64_t characteristic() const { return d_->p; }
  int degree() const { return d_->modulus.degree(); }
  const UPoly& modulus() const { return d_->modulus; }

  Element zero() const;
  Element one() const;
  Element generator() const;  // the class of t
  Element from_int(std::int64_t n) const;
  Element from_rational(const Rational& r) const;
  Element from_coeffs(std::vector<std::uint32_t> c) const;
  Element random(Rng& rng) const;
  /// Constant embedding F_p -> F_{p^k}; throws CharacteristicMismatch.
  Element embed(Fp a) const;
  std::string name() const;
  bool operator==(const ExtensionField& o) const;

 private:
  friend class ExtElement;
  explicit ExtensionField(std::shared_ptr<const ExtElement::Desc> d) : d_(std::move(d)) {}
  std::shared_ptr<const ExtElement::Desc> d_;
};

/// Maps a scalar of a subfield into a target field (identity for equal fields).
template <class Target>
struct Embed;

template <>
struct Embed<PrimeField> {
  static Fp apply(const PrimeField& f, Fp a) {
    if (a.modulus() != f.prime()) throw Error(ErrorCode::CharacteristicMismatch, "prime field embedding");
    return a;
  }
};

template <>
struct Embed<ExtensionField> {
  static ExtElement apply(const ExtensionField& f, Fp a) { return f.embed(a); }
  static ExtElement apply(const ExtensionField& f, const ExtElement& a) {
    if (!(a.field() == f)) throw Error(ErrorCode::IncompatibleFields, "extension fields differ");
    return a;
  }
};

template <>
struct Embed<RationalField> {
  static Rational apply(const RationalField&, const Rational& a) { return a; }
};

}  // namespace tricusp
