#pragma once

// Additive basis monomials Gamma_r^i Gamma_s^j (x) m, the condition-set
// variants, the leading-term order used for triangularity, and enumeration.

#include "sfb/coeff.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace sfb {

/// Generator of the basis alphabet, ordered e_r < e_s < Z(1,r) < Z(2,r) <
/// Z(2,s) < Z(3,r) < ... Z(1,r) only occurs in the geometric variants.
struct BasisGen {
  enum class Kind : std::uint8_t { er, es, z };
  Kind kind = Kind::er;
  int n = 0;
  Flavor flavor = Flavor::r;

  static BasisGen e(Flavor f) { return {f == Flavor::r ? Kind::er : Kind::es, 0, Flavor::r}; }
  static BasisGen z(int n, Flavor f) { return {Kind::z, n, f}; }

  bool is_euler() const { return kind != Kind::z; }
  int degree() const { return is_euler() ? -2 : 2 * n; }
  GammaTerm term() const {
    if (kind == Kind::er) return GammaTerm::euler(Flavor::r);
    if (kind == Kind::es) return GammaTerm::euler(Flavor::s);
    return GammaTerm::z(n, flavor);
  }
  std::string str() const { return term().str(); }

  friend auto operator<=>(const BasisGen&, const BasisGen&) = default;
  friend bool operator==(const BasisGen&, const BasisGen&) = default;
};

struct BasisMonomial {
  int i = 0;
  int j = 0;
  std::optional<BasisGen> x;  // empty for the unit
  std::vector<BasisGen> m;    // sorted, repeats allowed

  bool is_unit() const { return !x; }

  int degree() const {
    int d = 2 * (i + j);
    if (x) d += x->degree();
    for (const auto& g : m) d += g.degree();
    return d;
  }

  GammaTerm term() const {
    if (!x) return GammaTerm::constant(1);
    std::vector<GammaTerm> fs;
    fs.push_back(GammaTerm::gamma_pow(Flavor::r, i, GammaTerm::gamma_pow(Flavor::s, j, x->term())));
    for (const auto& g : m) fs.push_back(g.term());
    return GammaTerm::prod(std::move(fs));
  }
  std::string str() const { return term().str(); }

  int count_in_m(BasisGen::Kind k) const {
    return static_cast<int>(std::count_if(m.begin(), m.end(), [k](const BasisGen& g) { return g.kind == k; }));
  }

  friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

enum class BasisVariant : std::uint8_t { musf, musf_literal, omega, omega_mirrored, omega_alt };

inline std::string_view variant_name(BasisVariant v) {
  switch (v) {
    case BasisVariant::musf: return "musf";
    case BasisVariant::musf_literal: return "musf-literal";
    case BasisVariant::omega: return "omega";
    case BasisVariant::omega_mirrored: return "omega-mirrored";
    case BasisVariant::omega_alt: return "omega-alt";
  }
  return "?";
}

inline BasisVariant parse_variant(std::string_view s) {
  for (auto v : {BasisVariant::musf, BasisVariant::musf_literal, BasisVariant::omega,
                 BasisVariant::omega_mirrored, BasisVariant::omega_alt})
    if (variant_name(v) == s) return v;
  throw ValidationError("unknown basis variant '" + std::string(s) +
                        "' (musf, musf-literal, omega, omega-mirrored, omega-alt)");
}

inline bool is_geometric_variant(BasisVariant v) {
  return v == BasisVariant::omega || v == BasisVariant::omega_mirrored || v == BasisVariant::omega_alt;
}

/// Side conditions of a variant. Assumes x is the smallest factor of x*m.
inline bool satisfies(const BasisMonomial& b, BasisVariant v) {
  if (!b.x) return b.i == 0 && b.j == 0 && b.m.empty();
  using K = BasisGen::Kind;
  const K xk = b.x->kind;
  const int er_m = b.count_in_m(K::er);
  const int es_m = b.count_in_m(K::es);
  switch (v) {
    case BasisVariant::musf_literal:
      if (xk == K::es && b.j != 0) return false;
      if (xk == K::er && b.j != 0 && es_m > 0) return false;
      if (b.i != 0 && (b.j == 0 || er_m > 0)) return false;
      return true;
    case BasisVariant::musf:
      if (xk == K::es && b.j != 0) return false;
      if (xk == K::er && b.j != 0 && es_m > 0) return false;
      if (b.i != 0) {
        bool er_ok = xk == K::er && b.j != 0 && er_m == 0;
        bool es_ok = xk == K::es && er_m == 0;
        if (!er_ok && !es_ok) return false;
      }
      return true;
    case BasisVariant::omega: return b.i == 0;
    case BasisVariant::omega_mirrored: return b.i == 0 || b.j != 0;
    case BasisVariant::omega_alt: return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Leading-term order on Z-presentation monomials.
//
// Monomials with a positive Euler power (the C part) sit above those without.
// C part: compare max(a,b), then a, then b, then the Z part. F part: compare
// Z-degree, then total negative Euler power, then the e_r power, then the Z
// part, then b.

namespace detail {

inline std::strong_ordering lead_cmp(const ZMonomial& x, const ZMonomial& y) {
  const bool cx = x.a > 0 || x.b > 0;
  const bool cy = y.a > 0 || y.b > 0;
  if (cx != cy) return cx <=> cy;
  if (cx) {
    return std::tuple(std::max(x.a, x.b), x.a, x.b, x.xs) <=>
           std::tuple(std::max(y.a, y.b), y.a, y.b, y.xs);
  }
  return std::tuple(x.gen_degree(), -x.a - x.b, -x.a, x.xs, x.b) <=>
         std::tuple(y.gen_degree(), -y.a - y.b, -y.a, y.xs, y.b);
}

}  // namespace detail

inline bool lead_less(const ZMonomial& x, const ZMonomial& y) { return detail::lead_cmp(x, y) < 0; }

/// Leading monomial and its coefficient; p must be nonzero.
inline std::pair<ZMonomial, Coeff> leading_term(const ZPresentation& p) {
  auto it = std::max_element(p.terms().begin(), p.terms().end(),
                             [](const auto& u, const auto& v) { return lead_less(u.first, v.first); });
  return *it;
}

/// The `musf` basis monomial whose lambda image leads with lm, if any.
inline std::optional<BasisMonomial> musf_for_leading(const ZMonomial& lm) {
  std::vector<BasisGen> zs;
  for (const auto& [g, e] : lm.xs)
    for (int k = 0; k < e; ++k) zs.push_back(BasisGen::z(g.n, g.flavor));
  const int a = lm.a;
  const int b = lm.b;
  BasisMonomial r;
  auto take_smallest = [&r](std::vector<BasisGen> fs) {
    std::sort(fs.begin(), fs.end());
    if (fs.empty()) return;
    r.x = fs.front();
    r.m.assign(fs.begin() + 1, fs.end());
  };
  auto with_eulers = [&zs](int er, int es) {
    std::vector<BasisGen> fs(zs);
    fs.insert(fs.end(), er, BasisGen::e(Flavor::r));
    fs.insert(fs.end(), es, BasisGen::e(Flavor::s));
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  if (a >= 0 && b >= 0) {
    take_smallest(with_eulers(a, b));
  } else if (a >= 1 && b <= -1) {
    r.j = -b;
    r.x = BasisGen::e(Flavor::r);
    r.m = with_eulers(a - 1, 0);
  } else if (a <= -1 && b >= 1) {
    r.i = -a;
    r.x = BasisGen::e(Flavor::s);
    r.m = with_eulers(0, b - 1);
  } else if (a <= -1 && b <= 0) {
    r.i = -a;
    r.j = 1 - b;
    r.x = BasisGen::e(Flavor::r);
    r.m = with_eulers(0, 0);
  } else {
    // a == 0, b <= -1
    if (zs.empty()) return std::nullopt;
    r.j = -b;
    take_smallest(zs);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

/// All sorted multisets of Z generators of total degree d.
inline void z_multisets(int d, bool with_p, std::vector<BasisGen>& cur,
                        std::vector<std::vector<BasisGen>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  BasisGen lo = cur.empty() ? BasisGen::z(with_p ? 1 : 2, Flavor::r) : cur.back();
  std::vector<BasisGen> gens;
  if (with_p) gens.push_back(BasisGen::z(1, Flavor::r));
  for (int n = 2; 2 * n <= d; ++n) {
    gens.push_back(BasisGen::z(n, Flavor::r));
    gens.push_back(BasisGen::z(n, Flavor::s));
  }
  for (const auto& g : gens) {
    if (g < lo || g.degree() > d) continue;
    cur.push_back(g);
    z_multisets(d - g.degree(), with_p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<BasisGen>> z_multisets(int d, bool with_p) {
  std::vector<std::vector<BasisGen>> out;
  if (d < 0 || d % 2 != 0) return out;
  std::vector<BasisGen> cur;
  z_multisets(d, with_p, cur, out);
  return out;
}

}  // namespace detail

/// Basis elements of exactly degree d. For the Euler-class variants the
/// truncation bounds the e_r and e_s exponents in x*m; the geometric variants
/// use words in P = Z(1,r) and Z(n,V), n >= 2, and ignore it.
inline std::vector<BasisMonomial> enumerate_basis(int d, BasisVariant v, int truncation) {
  std::vector<BasisMonomial> out;
  if (d % 2 != 0) return out;
  if (d == 0) out.push_back(BasisMonomial{});
  const bool geometric = is_geometric_variant(v);
  const int max_e = geometric ? 0 : truncation;
  for (int pr = 0; pr <= max_e; ++pr) {
    for (int ps = 0; ps <= max_e; ++ps) {
      for (int ij = 0;; ++ij) {
        int zd = d - 2 * ij + 2 * (pr + ps);
        if (zd < 0) break;
        for (auto& zs : detail::z_multisets(zd, geometric)) {
          std::vector<BasisGen> fs(zs);
          fs.insert(fs.end(), pr, BasisGen::e(Flavor::r));
          fs.insert(fs.end(), ps, BasisGen::e(Flavor::s));
          if (fs.empty()) continue;  // the unit is added above
          std::sort(fs.begin(), fs.end());
          for (int i = 0; i <= ij; ++i) {
            BasisMonomial b{i, ij - i, fs.front(), std::vector<BasisGen>(fs.begin() + 1, fs.end())};
            if (satisfies(b, v)) out.push_back(std::move(b));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of monomials of degree d in F = MU_*[e_r^-1, e_s^-1, X(n,V)], as a
/// module over MU_*.
inline long long f_monomial_count(int d) {
  if (d < 0 || d % 2 != 0) return 0;
  long long total = 0;
  for (int k = 0; 2 * k <= d; ++k) {
    // k negative Euler powers split between e_r and e_s: k + 1 ways
    int rest = d - 2 * k;
    // X(n,V) has degree 2n + 2 = 2(n+1): multisets of two-coloured parts >= 2
    std::vector<long long> ways(rest / 2 + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= rest / 2; ++part)
      for (int colour = 0; colour < 2; ++colour)
        for (int s = part; s <= rest / 2; ++s) ways[s] += ways[s - part];
    total += (k + 1) * ways[rest / 2];
  }
  return total;
}

}  // namespace sfb
