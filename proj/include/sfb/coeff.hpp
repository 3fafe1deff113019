#pragma once

// Coefficient ring standing in for MU_*: the free commutative graded ring
// Z[g_1, g_2, ...] (g_n plays the class of CP^n), extended by formal
// augmentation symbols A(j;K).
//
// Modeling assumption: MU_* is replaced by the subring generated by the
// [CP^n]. It is torsion-free and the g_n are algebraically independent, which
// is all the algorithms in this library use.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sfb {

using Integer = boost::multiprecision::cpp_int;

/// Raised for malformed input (bad indices, degree mismatches, parse errors).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Placeholder for an augmentation value the calculus cannot determine:
/// A(j;K) stands for aug(Gamma_s^j(K)).
struct AugSymbol {
  int star_depth = 1;
  std::string base_key;
  int degree = 0;

  std::string name() const {
    return "A(" + std::to_string(star_depth) + ";" + base_key + ")";
  }
  friend bool operator==(const AugSymbol& a, const AugSymbol& b) {
    return a.star_depth == b.star_depth && a.base_key == b.base_key;
  }
};

/// A generator of the coefficient ring: g_n (n >= 1) or an A-symbol.
/// Ordering: g_1 < g_2 < ... < A-symbols ordered by (degree, name).
struct CoeffGen {
  enum class Kind : std::uint8_t { cp, aug };
  Kind kind = Kind::cp;
  int index = 1;  // n for g_n
  AugSymbol sym;  // valid when kind == aug

  static CoeffGen cp(int n) { return CoeffGen{Kind::cp, n, {}}; }
  static CoeffGen aug(AugSymbol s) { return CoeffGen{Kind::aug, 0, std::move(s)}; }

  int degree() const { return kind == Kind::cp ? 2 * index : sym.degree; }
  std::string name() const {
    return kind == Kind::cp ? "g" + std::to_string(index) : sym.name();
  }

  friend std::strong_ordering operator<=>(const CoeffGen& a, const CoeffGen& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind == Kind::cp) return a.index <=> b.index;
    if (auto c = a.sym.degree <=> b.sym.degree; c != 0) return c;
    return a.sym.name().compare(b.sym.name()) <=> 0;
  }
  friend bool operator==(const CoeffGen& a, const CoeffGen& b) {
    return (a <=> b) == 0;
  }
};

/// Sorted list of (generator, exponent >= 1).
class CoeffMonomial {
 public:
  CoeffMonomial() = default;
  explicit CoeffMonomial(CoeffGen g, int e = 1) {
    if (e > 0) factors_.emplace_back(std::move(g), e);
  }

  const std::vector<std::pair<CoeffGen, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [g, e] : factors_) d += g.degree() * e;
    return d;
  }
  bool has_aug() const {
    for (const auto& [g, e] : factors_)
      if (g.kind == CoeffGen::Kind::aug) return true;
    return false;
  }

  friend CoeffMonomial operator*(const CoeffMonomial& a, const CoeffMonomial& b) {
    CoeffMonomial r;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (const auto& [g, e] : factors_) {
      if (!s.empty()) s += "*";
      s += g.name();
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const CoeffMonomial&, const CoeffMonomial&) = default;
  friend auto operator<=>(const CoeffMonomial& a, const CoeffMonomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<std::pair<CoeffGen, int>> factors_;
};

/// Element of the coefficient ring: sparse map monomial -> nonzero integer.
class Coeff {
 public:
  using Terms = std::map<CoeffMonomial, Integer>;

  Coeff() = default;
  Coeff(long long n) { add_term(CoeffMonomial{}, Integer(n)); }  // NOLINT(implicit)
  Coeff(const Integer& n) { add_term(CoeffMonomial{}, n); }       // NOLINT(implicit)
  Coeff(CoeffMonomial m, Integer c) { add_term(std::move(m), std::move(c)); }

  static Coeff gen(CoeffGen g, int e = 1) { return Coeff(CoeffMonomial(std::move(g), e), 1); }
  static Coeff aug_symbol(AugSymbol s) { return gen(CoeffGen::aug(std::move(s))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  /// Integer value of a constant element.
  Integer constant_value() const {
    auto it = terms_.find(CoeffMonomial{});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  bool has_aug() const {
    for (const auto& [m, c] : terms_)
      if (m.has_aug()) return true;
    return false;
  }

  void add_term(CoeffMonomial m, Integer c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff& operator+=(const Coeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Coeff operator-() const {
    Coeff r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  Coeff pow(int e) const {
    Coeff r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Canonical text, e.g. "3*g1^2*g2 - A(2;Z(2,r))". Terms are listed by
  /// increasing degree, then generator order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<const CoeffMonomial*, const Integer*>> order;
    for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      return x.first->degree() < y.first->degree();
    });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : order) {
      Integer mag = *c < 0 ? Integer(-*c) : *c;
      if (first) {
        if (*c < 0) s += "-";
      } else {
        s += *c < 0 ? " - " : " + ";
      }
      first = false;
      if (m->is_one()) {
        s += mag.str();
      } else {
        if (mag != 1) s += mag.str() + "*";
        s += m->str();
      }
    }
    return s;
  }

  friend bool operator==(const Coeff&, const Coeff&) = default;
  friend auto operator<=>(const Coeff& a, const Coeff& b) { return a.terms_ <=> b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

 private:
  Terms terms_;
};

/// The designated class of CP^n: g_n, with cp(0) = 1.
inline Coeff cp(int n) {
  if (n < 0) throw ValidationError("cp: negative index " + std::to_string(n));
  if (n == 0) return Coeff(1);
  return Coeff::gen(CoeffGen::cp(n));
}

/// Substitute values for A-symbols. Degrees must match the symbols' degrees
/// (homogeneous assignments only).
using AugAssignments = std::map<std::string, Coeff>;

inline Coeff substitute_aug(const Coeff& x, const AugAssignments& assign) {
  Coeff r;
  for (const auto& [m, c] : x.terms()) {
    Coeff term(c);
    for (const auto& [g, e] : m.factors()) {
      if (g.kind == CoeffGen::Kind::aug) {
        auto it = assign.find(g.sym.name());
        if (it != assign.end()) {
          for (const auto& [am, ac] : it->second.terms())
            if (am.degree() != g.sym.degree)
              throw ValidationError("assignment for " + g.sym.name() + " has degree " +
                                    std::to_string(am.degree()) + ", symbol degree is " +
                                    std::to_string(g.sym.degree));
          term *= it->second.pow(e);
          continue;
        }
      }
      term *= Coeff::gen(g, e);
    }
    r += term;
  }
  return r;
}

}  // namespace sfb
