#pragma once

// Recursive-descent readers for coefficients, Phi elements and Gamma terms.
// Errors carry the 0-based character position.

#include "sfb/coeff.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace sfb {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  std::size_t pos() const { return i_; }
  std::string_view rest() const { return s_.substr(i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_with(std::string_view tok) {
    skip_ws();
    return s_.substr(i_).starts_with(tok);
  }
  bool accept(std::string_view tok) {
    if (!starts_with(tok)) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(i_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::string near = at < s_.size() ? " near '" + std::string(s_.substr(at, 12)) + "'" : " at end of input";
    throw ValidationError("parse error at position " + std::to_string(at) + near + ": " + what);
  }

  Integer unsigned_integer() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }
  int small_int() {
    skip_ws();
    std::size_t start = i_;
    bool neg = accept("-");
    Integer v = unsigned_integer();
    if (v > 1000000) fail_at(start, "integer out of range");
    int r = static_cast<int>(v);
    return neg ? -r : r;
  }
  bool digit_next() {
    skip_ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  Flavor flavor() {
    if (accept("r")) return Flavor::r;
    if (accept("s")) return Flavor::s;
    fail("expected flavor 'r' or 's'");
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

namespace detail {

inline int optional_power(Cursor& c, bool allow_negative) {
  if (!c.accept("^")) return 1;
  std::size_t at = c.pos();
  int e = c.small_int();
  if (!allow_negative && e < 0) c.fail_at(at, "negative exponent not allowed here");
  return e;
}

/// "Z(n,V)" for n >= 1 inside an A-symbol key; returns the index for the
/// degree computation.
inline std::string aug_key(Cursor& c, int& n) {
  std::size_t at = c.pos();
  c.expect("Z(");
  n = c.small_int();
  if (n < 1) c.fail_at(at, "Z(n,V): index >= 1 required");
  c.expect(",");
  Flavor f = c.flavor();
  c.expect(")");
  return "Z(" + std::to_string(n) + "," + flavor_char(f) + ")";
}

inline Coeff coeff_factor(Cursor& c) {
  if (c.digit_next()) return Coeff(c.unsigned_integer());
  std::size_t at = c.pos();
  if (c.accept("g")) {
    c.accept("_");
    int n = c.small_int();
    if (n < 1) c.fail_at(at, "g<n>: index >= 1 required");
    return cp(n).pow(optional_power(c, false));
  }
  if (c.accept("A(")) {
    int j = c.small_int();
    if (j < 1) c.fail_at(at, "A(j;K): depth >= 1 required");
    c.expect(";");
    int n = 0;
    std::string key = aug_key(c, n);
    c.expect(")");
    Coeff a = Coeff::aug_symbol(AugSymbol{j, key, 2 * n + 2 * j});
    return a.pow(optional_power(c, false));
  }
  if (c.accept("(")) {
    Coeff inner;
    bool neg = c.accept("-");
    auto term = [&c]() {
      Coeff t = coeff_factor(c);
      while (c.accept("*")) t *= coeff_factor(c);
      return t;
    };
    inner = neg ? -term() : term();
    while (true) {
      if (c.accept("+")) inner += term();
      else if (c.accept("-")) inner -= term();
      else break;
    }
    c.expect(")");
    return inner;
  }
  c.fail("expected coefficient (integer, g<n> or A(j;Z(n,V)))");
}

inline Coeff coeff_term(Cursor& c) {
  Coeff t = coeff_factor(c);
  while (c.accept("*")) t *= coeff_factor(c);
  return t;
}

inline Coeff coeff_sum(Cursor& c) {
  Coeff r = c.accept("-") ? -coeff_term(c) : coeff_term(c);
  while (true) {
    if (c.accept("+")) r += coeff_term(c);
    else if (c.accept("-")) r -= coeff_term(c);
    else return r;
  }
}

inline PhiElement phi_factor(Cursor& c, ZConvention conv) {
  std::size_t at = c.pos();
  if (c.accept("e_r")) return PhiElement::e(Flavor::r, optional_power(c, true));
  if (c.accept("e_s")) return PhiElement::e(Flavor::s, optional_power(c, true));
  if (c.starts_with("X(") || c.starts_with("Z(")) {
    bool is_x = c.accept("X(");
    if (!is_x) c.expect("Z(");
    int n = c.small_int();
    c.expect(",");
    Flavor f = c.flavor();
    c.expect(")");
    int e = optional_power(c, false);
    if (is_x) {
      if (n < 1) c.fail_at(at, "X(n,V): index >= 1 required");
      return PhiElement::gen(n, f, e);
    }
    if (n < 1) c.fail_at(at, "Z(n,V): index >= 1 required");
    return z_gen(n, f, conv).pow(e);
  }
  if (c.accept("(")) {
    PhiElement r;
    auto term = [&]() {
      PhiElement t = phi_factor(c, conv);
      while (c.accept("*")) t *= phi_factor(c, conv);
      return t;
    };
    r = c.accept("-") ? -term() : term();
    while (true) {
      if (c.accept("+")) r += term();
      else if (c.accept("-")) r -= term();
      else break;
    }
    c.expect(")");
    return r;
  }
  return PhiElement(coeff_factor(c));
}

inline PhiElement phi_term(Cursor& c, ZConvention conv) {
  PhiElement t = phi_factor(c, conv);
  while (c.accept("*")) t *= phi_factor(c, conv);
  return t;
}

inline GammaTerm term_sum(Cursor& c);

inline GammaTerm term_atom(Cursor& c) {
  std::size_t at = c.pos();
  if (c.accept("e_r")) return GammaTerm::euler(Flavor::r);
  if (c.accept("e_s")) return GammaTerm::euler(Flavor::s);
  if (c.accept("Z(")) {
    int n = c.small_int();
    if (n < 1) c.fail_at(at, "Z(n,V): index >= 1 required");
    c.expect(",");
    Flavor f = c.flavor();
    c.expect(")");
    return GammaTerm::z(n, f);
  }
  if (c.starts_with("G_r(") || c.starts_with("G_s(")) {
    Flavor f = c.accept("G_r(") ? Flavor::r : (c.expect("G_s("), Flavor::s);
    GammaTerm inner = term_sum(c);
    c.expect(")");
    return GammaTerm::gamma(f, std::move(inner));
  }
  if (c.accept("bar(")) {
    GammaTerm inner = term_sum(c);
    c.expect(")");
    return GammaTerm::bar(std::move(inner));
  }
  if (c.accept("sigma(")) {
    Coeff m = coeff_sum(c);
    c.expect(")");
    return GammaTerm::sigma(std::move(m));
  }
  if (c.accept("[")) {
    Coeff m = coeff_sum(c);
    c.expect("]");
    return GammaTerm::constant(std::move(m));
  }
  if (c.accept("(")) {
    GammaTerm inner = term_sum(c);
    c.expect(")");
    return inner;
  }
  if (c.digit_next()) return GammaTerm::constant(Coeff(c.unsigned_integer()));
  if (c.starts_with("g") || c.starts_with("A(")) return GammaTerm::constant(coeff_factor(c));
  c.fail("expected term");
}

inline GammaTerm term_prod(Cursor& c) {
  std::vector<GammaTerm> fs{term_atom(c)};
  while (c.accept("*")) fs.push_back(term_atom(c));
  return GammaTerm::prod(std::move(fs));
}

inline GammaTerm negate(GammaTerm t) {
  if (t.is_coeff()) return GammaTerm::constant(-t.coeff());
  return GammaTerm::prod({GammaTerm::constant(-1), std::move(t)});
}

inline GammaTerm term_sum(Cursor& c) {
  std::vector<GammaTerm> ks;
  ks.push_back(c.accept("-") ? negate(term_prod(c)) : term_prod(c));
  while (true) {
    if (c.accept("+")) ks.push_back(term_prod(c));
    else if (c.accept("-")) ks.push_back(negate(term_prod(c)));
    else break;
  }
  return GammaTerm::sum(std::move(ks));
}

}  // namespace detail

inline Coeff parse_coeff(std::string_view text) {
  Cursor c(text);
  Coeff r = detail::coeff_sum(c);
  c.finish();
  return r;
}

/// Grammar: sums and products of integers, g<n>, A(j;Z(n,V)), e_r^k, e_s^k,
/// X(n,V)^k and Z(n,V)^k (the latter expanded through z_gen).
inline PhiElement parse_phi(std::string_view text, ZConvention conv = ZConvention::same_flavor) {
  Cursor c(text);
  PhiElement r = c.accept("-") ? -detail::phi_term(c, conv) : detail::phi_term(c, conv);
  while (true) {
    if (c.accept("+")) r += detail::phi_term(c, conv);
    else if (c.accept("-")) r -= detail::phi_term(c, conv);
    else break;
  }
  c.finish();
  return r;
}

inline GammaTerm parse_term(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail("empty expression");
  GammaTerm t = detail::term_sum(c);
  c.finish();
  return t;
}

}  // namespace sfb
