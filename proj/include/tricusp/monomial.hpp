#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace tricusp {

/// Exponent vector in up to four variables; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, 4> e{};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2] && e[3] <= o.e[3];
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
  }
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < 4; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

enum class OrderKind { GRevLex, GLex, Lex, Block };

/// Monomial order. Block: variables [0, split) are eliminated; each block is
/// compared by graded reverse lex.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  int split = 0;

  static MonomialOrder grevlex() { return {OrderKind::GRevLex, 0}; }
  static MonomialOrder glex() { return {OrderKind::GLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && (kind != OrderKind::Block || split == o.split); }

  /// Negative, zero or positive as a <, ==, > b; nvars is the ring arity.
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
      case OrderKind::GRevLex: return grevlex_range(a, b, 0, nvars);
      case OrderKind::GLex: {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        return lex_range(a, b, 0, nvars);
      }
      case OrderKind::Lex: return lex_range(a, b, 0, nvars);
      case OrderKind::Block: {
        const int c = grevlex_range(a, b, 0, split);
        return c != 0 ? c : grevlex_range(a, b, split, nvars);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::GRevLex: return "grevlex";
      case OrderKind::GLex: return "glex";
      case OrderKind::Lex: return "lex";
      case OrderKind::Block: return "block(" + std::to_string(split) + ")";
    }
    return "?";
  }

 private:
  static int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
};

}  // namespace tricusp
