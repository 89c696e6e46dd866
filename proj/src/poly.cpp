#include "tricusp/poly.hpp"

#include <cctype>

namespace tricusp {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial m;
  // Recursive lex-descending enumeration.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      m.e[var] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
    m.e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::string variable_name(int nvars, int index) {
  if (nvars == 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index);
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

  ParsedPoly run() {
    skip();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip();
        // A leading '-' on the term itself is allowed after a separator.
        if (!first && (peek() == '+' || peek() == '-')) {
          if (take() == '-') sign = -sign;
          skip();
        }
      } else if (!first) {
        throw SyntaxError(pos_, "expected '+' or '-'");
      }
      first = false;
      term(sign);
      skip();
    }
    ParsedPoly out;
    out.nvars = nvars_ == 0 ? 4 : nvars_;
    out.terms = std::move(terms_);
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  void term(int sign) {
    skip();
    Rational coef(sign);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        take();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw SyntaxError(at, "zero denominator");
      }
      coef = coef * Rational(num, den);
      have_coef = true;
      skip();
      if (peek() == '*') {
        take();
        skip();
        if (!is_var_start()) throw SyntaxError(pos_, "expected variable after '*'");
      }
    }
    Monomial m;
    if (is_var_start()) {
      for (;;) {
        skip();
        const int v = variable();
        skip();
        int power = 1;
        if (peek() == '^') {
          take();
          const std::size_t at = pos_;
          mpz_class e = integer();
          if (e > 1000) throw SyntaxError(at, "exponent too large");
          power = static_cast<int>(e.get_si());
        }
        if (m.e[v] + power > 1000) throw SyntaxError(pos_, "exponent too large");
        m.e[v] = static_cast<std::uint16_t>(m.e[v] + power);
        skip();
        if (peek() != '*') break;
        take();
        skip();
        if (!is_var_start()) throw SyntaxError(pos_, "expected variable after '*'");
      }
    } else if (!have_coef) {
      throw SyntaxError(pos_, "expected coefficient or variable");
    }
    terms_.emplace_back(m, coef);
  }

  bool is_var_start() const {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  int variable() {
    const std::size_t start = pos_;
    std::string name;
    name += take();
    if (name == "x" && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) name += take();
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      // Reject runs such as "x12" or "xy": only single-token names exist.
      name += take();
    }
    int arity = 0, index = -1;
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3') {
      arity = 4;
      index = name[1] - '0';
    } else if (name == "x" || name == "y" || name == "z") {
      arity = 3;
      index = name == "x" ? 0 : name == "y" ? 1 : 2;
    } else {
      throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
    }
    if (nvars_ == 0) nvars_ = arity;
    if (nvars_ != arity) {
      throw Error(ErrorCode::UnknownVariable, "'" + name + "' does not belong to the " + std::to_string(nvars_) +
                                                  "-variable ring (position " + std::to_string(start) + ")");
    }
    return index;
  }

  const std::string& s_;
  int nvars_;
  std::size_t pos_ = 0;
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace

ParsedPoly parse_terms(const std::string& text, int nvars) {
  if (nvars != 0 && nvars != 3 && nvars != 4) throw Error(ErrorCode::InvalidArgument, "arity must be 3 or 4");
  return Parser(text, nvars).run();
}

std::string coefficient_text(const Fp& c, bool& negative) {
  const std::uint32_t p = c.modulus(), v = c.value();
  negative = v > p / 2;
  return std::to_string(negative ? p - v : v);
}

std::string coefficient_text(const Rational& c, bool& negative) {
  negative = c < Rational(0);
  return (negative ? -c : c).to_string();
}

std::string coefficient_text(const ExtElement& c, bool& negative) {
  negative = false;
  if (c.in_prime_field()) return coefficient_text(Fp(c.coeffs().empty() ? 0 : c.coeffs()[0], c.prime()), negative);
  return "(" + c.to_string() + ")";
}

}  // namespace tricusp
