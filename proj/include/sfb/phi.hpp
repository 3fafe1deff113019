#pragma once

// Laurent polynomial ring Phi = MU_*[e_r^{+-1}, e_s^{+-1}, X(n,V) | n >= 1] and
// its alternative coordinates Z(n,V) (n >= 2). Elements are stored in the X
// presentation; the Z presentation is a conversion (used for leading terms).

#include "sfb/coeff.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sfb {

enum class Flavor : std::uint8_t { r, s };

inline Flavor other(Flavor f) { return f == Flavor::r ? Flavor::s : Flavor::r; }
inline char flavor_char(Flavor f) { return f == Flavor::r ? 'r' : 's'; }

/// Index of a polynomial generator X(n,V) or Z(n,V). Ordered
/// (1,r) < (1,s) < (2,r) < (2,s) < ...
struct GenIndex {
  int n = 1;
  Flavor flavor = Flavor::r;
  friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

struct XTag {
  static constexpr const char* name = "X";
  static constexpr int min_index = 1;
  static constexpr int gen_degree(int n) { return 2 * n + 2; }
};

struct ZTag {
  static constexpr const char* name = "Z";
  static constexpr int min_index = 2;
  static constexpr int gen_degree(int n) { return 2 * n; }
};

/// e_r^a e_s^b times a monomial in the polynomial generators.
template <class Tag>
struct PhiMonomialT {
  int a = 0;
  int b = 0;
  std::vector<std::pair<GenIndex, int>> xs;  // sorted, exponents >= 1

  int degree() const {
    int d = -2 * a - 2 * b;
    for (const auto& [g, e] : xs) d += Tag::gen_degree(g.n) * e;
    return d;
  }
  int gen_degree() const {
    int d = 0;
    for (const auto& [g, e] : xs) d += Tag::gen_degree(g.n) * e;
    return d;
  }
  int gen_count() const {
    int c = 0;
    for (const auto& [g, e] : xs) c += e;
    return c;
  }

  friend PhiMonomialT operator*(const PhiMonomialT& x, const PhiMonomialT& y) {
    PhiMonomialT r{x.a + y.a, x.b + y.b, {}};
    auto i = x.xs.begin();
    auto j = y.xs.begin();
    while (i != x.xs.end() || j != y.xs.end()) {
      if (j == y.xs.end() || (i != x.xs.end() && i->first < j->first)) {
        r.xs.push_back(*i++);
      } else if (i == x.xs.end() || j->first < i->first) {
        r.xs.push_back(*j++);
      } else {
        r.xs.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::string str() const {
    std::string s;
    auto put = [&s](const std::string& f) {
      if (!s.empty()) s += "*";
      s += f;
    };
    if (a != 0) put(a == 1 ? "e_r" : "e_r^" + std::to_string(a));
    if (b != 0) put(b == 1 ? "e_s" : "e_s^" + std::to_string(b));
    for (const auto& [g, e] : xs) {
      std::string f = std::string(Tag::name) + "(" + std::to_string(g.n) + "," +
                      flavor_char(g.flavor) + ")";
      if (e != 1) f += "^" + std::to_string(e);
      put(f);
    }
    return s;
  }

  friend bool operator==(const PhiMonomialT&, const PhiMonomialT&) = default;
  friend auto operator<=>(const PhiMonomialT&, const PhiMonomialT&) = default;
};

template <class Tag>
class PhiPoly {
 public:
  using Monomial = PhiMonomialT<Tag>;
  using Terms = std::map<Monomial, Coeff>;

  PhiPoly() = default;
  PhiPoly(const Coeff& c) { add_term(Monomial{}, c); }  // NOLINT(implicit)
  PhiPoly(long long n) : PhiPoly(Coeff(n)) {}           // NOLINT(implicit)
  PhiPoly(Monomial m, Coeff c) { add_term(std::move(m), std::move(c)); }

  static PhiPoly e(Flavor f, int power = 1) {
    Monomial m;
    (f == Flavor::r ? m.a : m.b) = power;
    return PhiPoly(std::move(m), Coeff(1));
  }
  static PhiPoly gen(int n, Flavor f, int power = 1) {
    if (n < Tag::min_index)
      throw ValidationError(std::string(Tag::name) + " index must be >= " +
                            std::to_string(Tag::min_index));
    Monomial m;
    if (power > 0) m.xs.emplace_back(GenIndex{n, f}, power);
    return PhiPoly(std::move(m), Coeff(1));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PhiPoly& operator+=(const PhiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PhiPoly& operator-=(const PhiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  PhiPoly operator-() const {
    PhiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend PhiPoly operator+(PhiPoly x, const PhiPoly& y) { return x += y; }
  friend PhiPoly operator-(PhiPoly x, const PhiPoly& y) { return x -= y; }
  friend PhiPoly operator*(const PhiPoly& x, const PhiPoly& y) {
    PhiPoly r;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
    return r;
  }
  PhiPoly& operator*=(const PhiPoly& o) { return *this = *this * o; }

  /// Multiply by e_r^da e_s^db.
  PhiPoly shifted(int da, int db) const {
    PhiPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial k = m;
      k.a += da;
      k.b += db;
      r.terms_.emplace(std::move(k), c);
    }
    return r;
  }

  PhiPoly pow(int e) const {
    PhiPoly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  bool has_aug() const {
    for (const auto& [m, c] : terms_)
      if (c.has_aug()) return true;
    return false;
  }

  /// Sum of the terms of total degree d (monomial degree plus coefficient
  /// degree). Odd d always yields zero.
  PhiPoly homogeneous_component(int d) const {
    PhiPoly r;
    for (const auto& [m, c] : terms_)
      for (const auto& [cm, cc] : c.terms())
        if (m.degree() + cm.degree() == d) r.add_term(m, Coeff(cm, cc));
    return r;
  }

  /// Set of total degrees present.
  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [m, c] : terms_)
      for (const auto& [cm, cc] : c.terms()) ds.push_back(m.degree() + cm.degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  }

  /// True iff no monomial has a positive Euler-class power.
  bool is_in_F() const {
    for (const auto& [m, c] : terms_)
      if (m.a > 0 || m.b > 0) return false;
    return true;
  }

  /// Projection onto the complement spanned by monomials with a positive
  /// power of e_r or e_s.
  PhiPoly project_C() const {
    PhiPoly r;
    for (const auto& [m, c] : terms_)
      if (m.a > 0 || m.b > 0) r.terms_.emplace(m, c);
    return r;
  }

  PhiPoly map_coeffs(const auto& f) const {
    PhiPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Text form: terms expanded over coefficient monomials, e.g.
  /// "e_r^-2*X(1,r) + 3*g1*e_s^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      for (const auto& [cm, cc] : c.terms()) {
        Integer mag = cc < 0 ? Integer(-cc) : cc;
        if (first) {
          if (cc < 0) s += "-";
        } else {
          s += cc < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (mag != 1 || (cm.is_one() && m == Monomial{})) body = mag.str();
        if (!cm.is_one()) body += (body.empty() ? "" : "*") + cm.str();
        if (!(m == Monomial{})) body += (body.empty() ? "" : "*") + m.str();
        s += body;
      }
    }
    return s;
  }

  friend bool operator==(const PhiPoly&, const PhiPoly&) = default;

 private:
  Terms terms_;
};

using PhiMonomial = PhiMonomialT<XTag>;
using PhiElement = PhiPoly<XTag>;
using ZMonomial = PhiMonomialT<ZTag>;
using ZPresentation = PhiPoly<ZTag>;

/// Which Euler class accompanies X(n-1,V) in the image of P(C^n + V).
/// same_flavor: Z(n,V) = X(n-1,V) + e_V^-n. opposite_flavor: + e_{V*}^-n.
enum class ZConvention : std::uint8_t { same_flavor, opposite_flavor };

inline Flavor z_partner(Flavor f, ZConvention conv) {
  return conv == ZConvention::same_flavor ? f : other(f);
}

/// Image of P(C^n + V) in Phi. For n = 1 both conventions give
/// e_r^-1 + e_s^-1 (X(0,V) is e_V^-1).
inline PhiElement z_gen(int n, Flavor f, ZConvention conv = ZConvention::same_flavor) {
  if (n < 1) throw ValidationError("Z(n,V) requires n >= 1, got " + std::to_string(n));
  if (n == 1) return PhiElement::e(Flavor::r, -1) + PhiElement::e(Flavor::s, -1);
  return PhiElement::gen(n - 1, f) + PhiElement::e(z_partner(f, conv), -n);
}

inline ZPresentation to_z_basis(const PhiElement& p, ZConvention conv = ZConvention::same_flavor) {
  ZPresentation r;
  for (const auto& [m, c] : p.terms()) {
    ZMonomial base{m.a, m.b, {}};
    ZPresentation t(base, c);
    for (const auto& [g, e] : m.xs) {
      // X(n,V) = Z(n+1,V) - e_{V'}^-(n+1)
      ZPresentation x = ZPresentation::gen(g.n + 1, g.flavor) -
                        ZPresentation::e(z_partner(g.flavor, conv), -(g.n + 1));
      t *= x.pow(e);
    }
    r += t;
  }
  return r;
}

inline PhiElement from_z_basis(const ZPresentation& p, ZConvention conv = ZConvention::same_flavor) {
  PhiElement r;
  for (const auto& [m, c] : p.terms()) {
    PhiMonomial base{m.a, m.b, {}};
    PhiElement t(base, c);
    for (const auto& [g, e] : m.xs) t *= z_gen(g.n, g.flavor, conv).pow(e);
    r += t;
  }
  return r;
}

struct HomogeneousPart {
  PhiElement part;
  bool odd_degree = false;  // set when an odd degree was requested
};

/// Degree-d part of p. Everything is concentrated in even degrees, so an odd
/// request returns zero and raises the flag.
inline HomogeneousPart homogeneous_component(const PhiElement& p, int d) {
  if (d % 2 != 0) return {PhiElement{}, true};
  return {p.homogeneous_component(d), false};
}

}  // namespace sfb
