#include "tricusp/field.hpp"

#include <algorithm>
#include <sstream>

namespace tricusp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod_u32(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

// ---------------------------------------------------------------------------

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ZeroInverse, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of rational 0");
  return Rational(q_.get_den(), q_.get_num());
}

bool Rational::normalized() const {
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && (n == 0 ? d == 1 : g == 1);
}

// ---------------------------------------------------------------------------

Fp Fp::inverse() const { return raw(invmod(v_, p_), p_); }

Fp Fp::pow(std::uint64_t e) const { return raw(powmod_u32(v_, e, p_), p_); }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a supported prime");
}

Fp PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp PrimeField::from_rational(const Rational& r) const {
  const std::uint32_t num = reduce_mpz(r.numerator(), p_);
  const std::uint32_t den = reduce_mpz(r.denominator(), p_);
  return Fp(num, p_) * Fp(den, p_).inverse();
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

UPoly UPoly::monomial(std::uint32_t p, std::uint32_t coeff, int degree) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return UPoly(p, std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t s = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r[i] = s >= p_ ? s - p_ : s;
  }
  return UPoly(p_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = coeff(static_cast<int>(i)), b = o.coeff(static_cast<int>(i));
    r[i] = a >= b ? a - b : a + p_ - b;
  }
  return UPoly(p_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  const std::uint64_t pp = static_cast<std::uint64_t>(p_) * p_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      std::uint64_t& a = acc[i + j];
      a += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
      if (a >= pp) a -= pp;
    }
  }
  std::vector<std::uint32_t> r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return UPoly(p_, std::move(r));
}

UPoly UPoly::scaled(std::uint32_t s) const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], s, p_);
  return UPoly(p_, std::move(r));
}

bool UPoly::operator<(const UPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "univariate division by zero");
  if (degree() < divisor.degree()) return {UPoly(p_), *this};
  std::vector<std::uint32_t> rem = c_;
  const int dd = divisor.degree();
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  const std::uint32_t inv_lead = invmod(divisor.lead(), p_);
  for (int i = degree(); i >= dd; --i) {
    const std::uint32_t c = rem[i];
    if (c == 0) continue;
    const std::uint32_t q = mulmod(c, inv_lead, p_);
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) {
      const std::uint32_t t = mulmod(q, divisor.c_[j], p_);
      std::uint32_t& r = rem[i - dd + j];
      r = r >= t ? r - t : r + p_ - t;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UPoly(p_, std::move(quot)), UPoly(p_, std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(lead(), p_));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(p_);
  std::vector<std::uint32_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], static_cast<std::uint32_t>(i % p_), p_);
  return UPoly(p_, std::move(r));
}

std::uint32_t UPoly::eval(std::uint32_t x) const {
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (r * x + *it) % p_;
  return static_cast<std::uint32_t>(r);
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i] << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, const mpz_class& exponent, const UPoly& modulus) {
  UPoly result = UPoly(base.prime(), {1}) % modulus;
  UPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const std::uint32_t p = f.prime();
  const UPoly fm = f.monic();
  const UPoly t = UPoly::variable(p);
  UPoly h = t % fm;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, mpz_class(p), fm);
    if (!gcd(fm, h - t).is_one()) return false;
  }
  return true;
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
UPoly pth_root(const UPoly& f) {
  const std::uint32_t p = f.prime();
  std::vector<std::uint32_t> r(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r[i / p] = f.coeff(i);
  return UPoly(p, std::move(r));
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0.monic();
  if (f.degree() <= 0) return out;
  const std::uint32_t p = f.prime();
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_factorization(pth_root(c.monic()))) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<UPoly, int>> distinct_degree_factorization(const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = f0.monic();
  const std::uint32_t p = f.prime();
  const UPoly t = UPoly::variable(p);
  UPoly h = t % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, mpz_class(p), f);
    UPoly g = gcd(f, h - t);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f0, int d, Rng& rng) {
  UPoly f = f0.monic();
  const std::uint32_t p = f.prime();
  if (f.degree() == d) return {f};
  if (p == 2) throw Error(ErrorCode::InvalidField, "equal-degree splitting needs odd characteristic");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  const mpz_class e = (q - 1) / 2;
  const int n = f.degree();
  for (;;) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = static_cast<std::uint32_t>(rng.below(p));
    UPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    UPoly g = gcd(f, a);
    if (g.is_one()) {
      UPoly b = powmod(a, e, f) - UPoly(p, {1});
      g = gcd(f, b);
    }
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<std::pair<UPoly, int>> factor(const UPoly& f, std::uint64_t seed) {
  std::vector<std::pair<UPoly, int>> out;
  Rng rng(seed);
  for (auto& [sqf, mult] : squarefree_factorization(f)) {
    for (auto& [block, d] : distinct_degree_factorization(sqf)) {
      for (auto& g : equal_degree_factorization(block, d, rng)) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

UPoly find_irreducible(std::uint32_t p, int k, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (k == 1) return UPoly::variable(p);
  if (seed == 0) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(k) + 1, 0);
    c[k] = 1;
    for (;;) {
      UPoly cand(p, c);
      if (is_irreducible(cand)) return cand;
      for (int i = 0; i < k; ++i) {  // odometer
        if (++c[i] < p) break;
        c[i] = 0;
      }
    }
  }
  Rng rng(seed);
  for (;;) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(rng.below(p));
    c[k] = 1;
    UPoly cand(p, std::move(c));
    if (is_irreducible(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Extension fields

ExtensionField::ExtensionField(const UPoly& modulus) {
  if (modulus.degree() < 1 || modulus.lead() != 1) throw Error(ErrorCode::InvalidField, "modulus must be monic of positive degree");
  if (!is_prime(modulus.prime())) throw Error(ErrorCode::InvalidField, "characteristic must be prime");
  if (!is_irreducible(modulus)) throw Error(ErrorCode::InvalidField, "modulus " + modulus.to_string() + " is reducible");
  d_ = std::make_shared<const ExtElement::Desc>(ExtElement::Desc{modulus.prime(), modulus});
}

ExtensionField ExtensionField::of_degree(std::uint32_t p, int k, std::uint64_t seed) {
  return ExtensionField(find_irreducible(p, k, seed));
}

ExtElement ExtensionField::zero() const { return ExtElement(d_, std::vector<std::uint32_t>(degree(), 0)); }

ExtElement ExtensionField::one() const { return from_int(1); }

ExtElement ExtensionField::generator() const {
  return from_coeffs({0, 1});
}

ExtElement ExtensionField::from_coeffs(std::vector<std::uint32_t> c) const {
  UPoly r = UPoly(d_->p, std::move(c)) % d_->modulus;
  std::vector<std::uint32_t> v = r.coeffs();
  v.resize(degree(), 0);
  return ExtElement(d_, std::move(v));
}

ExtElement ExtensionField::from_int(std::int64_t n) const {
  return embed(PrimeField(d_->p).from_int(n));
}

ExtElement ExtensionField::from_rational(const Rational& r) const {
  return embed(PrimeField(d_->p).from_rational(r));
}

ExtElement ExtensionField::random(Rng& rng) const {
  std::vector<std::uint32_t> v(degree());
  for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(d_->p));
  return ExtElement(d_, std::move(v));
}

ExtElement ExtensionField::embed(Fp a) const {
  if (a.modulus() != d_->p) throw Error(ErrorCode::CharacteristicMismatch, "F_" + std::to_string(a.modulus()) + " into " + name());
  std::vector<std::uint32_t> v(degree(), 0);
  v[0] = a.value();
  return ExtElement(d_, std::move(v));
}

std::string ExtensionField::name() const {
  return "GF(" + std::to_string(d_->p) + "^" + std::to_string(degree()) + ")[" + d_->modulus.to_string() + "]";
}

bool ExtensionField::operator==(const ExtensionField& o) const {
  return d_ == o.d_ || (d_->p == o.d_->p && d_->modulus == o.d_->modulus);
}

std::uint32_t ExtElement::prime() const { return d_ ? d_->p : 0; }
int ExtElement::degree() const { return static_cast<int>(c_.size()); }

bool ExtElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool ExtElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool ExtElement::in_prime_field() const {
  return c_.empty() || std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

void ExtElement::check(const ExtElement& o) const {
  if (d_ == o.d_) return;
  if (!d_ || !o.d_ || d_->p != o.d_->p || !(d_->modulus == o.d_->modulus)) {
    throw Error(ErrorCode::IncompatibleFields, "extension field operands differ");
  }
}

ExtensionField ExtElement::field() const { return ExtensionField(d_); }

ExtElement ExtElement::operator+(const ExtElement& o) const {
  check(o);
  std::vector<std::uint32_t> r(c_.size());
  const std::uint32_t p = d_->p;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    r[i] = s >= p ? s - p : s;
  }
  return ExtElement(d_, std::move(r));
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  check(o);
  std::vector<std::uint32_t> r(c_.size());
  const std::uint32_t p = d_->p;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return ExtElement(d_, std::move(r));
}

ExtElement ExtElement::operator-() const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] == 0 ? 0 : d_->p - c_[i];
  return ExtElement(d_, std::move(r));
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
  check(o);
  const std::size_t k = c_.size();
  const std::uint32_t p = d_->p;
  if (k == 1) return ExtElement(d_, {mulmod(c_[0], o.c_[0], p)});
  std::vector<std::uint64_t> acc(2 * k - 1, 0);
  const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
  for (std::size_t i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t& a = acc[i + j];
      a += static_cast<std::uint64_t>(c_[i]) * o.c_[j];
      if (a >= pp) a -= pp;
    }
  }
  for (auto& a : acc) a %= p;
  // Reduce with the monic modulus: t^k = -sum m_i t^i.
  const auto& m = d_->modulus.coeffs();
  for (std::size_t i = acc.size(); i-- > k;) {
    const std::uint64_t c = acc[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      acc[i - k + j] = (acc[i - k + j] + (p - c) * m[j]) % p;
    }
  }
  std::vector<std::uint32_t> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  return ExtElement(d_, std::move(r));
}

bool ExtElement::operator==(const ExtElement& o) const {
  if (c_ != o.c_) return false;
  if (d_ == o.d_) return true;
  return d_ && o.d_ && d_->p == o.d_->p && d_->modulus == o.d_->modulus;
}

ExtElement ExtElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in extension field");
  // Extended Euclid on (a, modulus).
  const std::uint32_t p = d_->p;
  UPoly r0 = d_->modulus, r1(p, c_);
  UPoly s0(p), s1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  UPoly inv = s0.scaled(invmod(r0.lead(), p)) % d_->modulus;
  std::vector<std::uint32_t> v = inv.coeffs();
  v.resize(c_.size(), 0);
  return ExtElement(d_, std::move(v));
}

ExtElement ExtElement::pow(const mpz_class& e) const {
  ExtElement result = field().one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * *this;
  }
  return result;
}

ExtElement ExtElement::frobenius() const { return pow(mpz_class(d_->p)); }

std::string ExtElement::to_string() const {
  if (!d_) return "<unset>";
  return UPoly(d_->p, c_).to_string("t");
}

}  // namespace tricusp
