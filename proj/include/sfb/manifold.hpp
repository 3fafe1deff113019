#pragma once

// Manifold expressions built from P(C^n + V), points, disjoint unions,
// products and the gamma / gamma* constructions; fixed-point data of the
// isolated case; realizability by products of P(C + rho).

#include "sfb/calculus.hpp"
#include "sfb/coeff.hpp"
#include "sfb/engine.hpp"
#include "sfb/parse.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfb {

enum class ManifoldKind : std::uint8_t { pc, point, disjoint_union, product, gamma, gamma_star };

class ManifoldExpr {
 public:
  struct Node {
    ManifoldKind kind;
    int n = 0;
    Flavor flavor = Flavor::r;
    std::vector<std::pair<Integer, ManifoldExpr>> parts;  // union: weight, part
    std::vector<ManifoldExpr> kids;                       // product, gamma
  };

  ManifoldExpr() : ManifoldExpr(Node{ManifoldKind::disjoint_union, 0, Flavor::r, {}, {}}) {}

  /// P(C^n + V).
  static ManifoldExpr pc(int n, Flavor f) {
    if (n < 1) throw ValidationError("P(n,V): index >= 1 required, got " + std::to_string(n));
    return ManifoldExpr(Node{ManifoldKind::pc, n, f, {}, {}});
  }
  static ManifoldExpr point() { return ManifoldExpr(Node{ManifoldKind::point, 0, Flavor::r, {}, {}}); }
  static ManifoldExpr empty() { return ManifoldExpr(); }
  /// Weighted disjoint union; a negative weight reverses orientation.
  static ManifoldExpr disjoint_union(std::vector<std::pair<Integer, ManifoldExpr>> parts) {
    return ManifoldExpr(Node{ManifoldKind::disjoint_union, 0, Flavor::r, std::move(parts), {}});
  }
  static ManifoldExpr product(std::vector<ManifoldExpr> fs) {
    if (fs.empty()) return point();
    if (fs.size() == 1) return std::move(fs.front());
    return ManifoldExpr(Node{ManifoldKind::product, 0, Flavor::r, {}, std::move(fs)});
  }
  static ManifoldExpr gamma(ManifoldExpr m) {
    return ManifoldExpr(Node{ManifoldKind::gamma, 0, Flavor::r, {}, {std::move(m)}});
  }
  static ManifoldExpr gamma_star(ManifoldExpr m) {
    return ManifoldExpr(Node{ManifoldKind::gamma_star, 0, Flavor::r, {}, {std::move(m)}});
  }
  /// (P(C + rho))^n; the empty product is a point.
  static ManifoldExpr p1_power(int n) {
    return product(std::vector<ManifoldExpr>(static_cast<std::size_t>(n), pc(1, Flavor::r)));
  }

  ManifoldKind kind() const { return node_->kind; }
  int index() const { return node_->n; }
  Flavor flavor() const { return node_->flavor; }
  const auto& parts() const { return node_->parts; }
  const auto& kids() const { return node_->kids; }

  int dimension() const {
    switch (kind()) {
      case ManifoldKind::pc: return 2 * index();
      case ManifoldKind::point: return 0;
      case ManifoldKind::disjoint_union: {
        int d = 0;
        for (const auto& [w, p] : parts()) d = std::max(d, p.dimension());
        return d;
      }
      case ManifoldKind::product: {
        int d = 0;
        for (const auto& k : kids()) d += k.dimension();
        return d;
      }
      case ManifoldKind::gamma:
      case ManifoldKind::gamma_star: return kids().front().dimension() + 2;
    }
    return 0;
  }

  /// The class in the Gamma calculus: P(C^n + V) is Z(n,V), gamma is
  /// Gamma_r and gamma* is Gamma_s.
  GammaTerm term() const {
    switch (kind()) {
      case ManifoldKind::pc: return GammaTerm::z(index(), flavor());
      case ManifoldKind::point: return GammaTerm::constant(1);
      case ManifoldKind::disjoint_union: {
        std::vector<GammaTerm> ks;
        for (const auto& [w, p] : parts())
          ks.push_back(w == 1 ? p.term() : GammaTerm::constant(Coeff(w)) * p.term());
        return GammaTerm::sum(std::move(ks));
      }
      case ManifoldKind::product: {
        std::vector<GammaTerm> ks;
        for (const auto& k : kids()) ks.push_back(k.term());
        return GammaTerm::prod(std::move(ks));
      }
      case ManifoldKind::gamma: return GammaTerm::gamma(Flavor::r, kids().front().term());
      case ManifoldKind::gamma_star: return GammaTerm::gamma(Flavor::s, kids().front().term());
    }
    return GammaTerm::constant(0);
  }

  std::string str() const {
    switch (kind()) {
      case ManifoldKind::pc:
        return "P(" + std::to_string(index()) + "," + flavor_char(flavor()) + ")";
      case ManifoldKind::point: return "pt";
      case ManifoldKind::disjoint_union: {
        if (parts().empty()) return "empty";
        std::string s;
        for (const auto& [w, p] : parts()) {
          Integer mag = w < 0 ? Integer(-w) : w;
          if (s.empty()) {
            if (w < 0) s += "-";
          } else {
            s += w < 0 ? " - " : " + ";
          }
          if (mag != 1) s += mag.str() + "*";
          bool wrap = p.kind() == ManifoldKind::disjoint_union || (mag != 1 && p.kind() == ManifoldKind::product);
          s += wrap ? "(" + p.str() + ")" : p.str();
        }
        return s;
      }
      case ManifoldKind::product: {
        std::string s;
        for (const auto& k : kids()) {
          if (!s.empty()) s += " x ";
          bool wrap = k.kind() == ManifoldKind::disjoint_union || k.kind() == ManifoldKind::product;
          s += wrap ? "(" + k.str() + ")" : k.str();
        }
        return s;
      }
      case ManifoldKind::gamma: return "gamma(" + kids().front().str() + ")";
      case ManifoldKind::gamma_star: return "gamma*(" + kids().front().str() + ")";
    }
    return {};
  }

 private:
  explicit ManifoldExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

namespace detail {

inline ManifoldExpr manifold_union(Cursor& c);

inline ManifoldExpr manifold_factor(Cursor& c) {
  std::size_t at = c.pos();
  ManifoldExpr base;
  if (c.accept("P(")) {
    int n = c.small_int();
    if (n < 1) c.fail_at(at, "P(n,V): index >= 1 required");
    c.expect(",");
    Flavor f = c.flavor();
    c.expect(")");
    base = ManifoldExpr::pc(n, f);
  } else if (c.accept("pt")) {
    base = ManifoldExpr::point();
  } else if (c.accept("empty")) {
    base = ManifoldExpr::empty();
  } else if (c.accept("gamma*(")) {
    base = ManifoldExpr::gamma_star(manifold_union(c));
    c.expect(")");
  } else if (c.accept("gamma(")) {
    base = ManifoldExpr::gamma(manifold_union(c));
    c.expect(")");
  } else if (c.accept("(")) {
    base = manifold_union(c);
    c.expect(")");
  } else {
    c.fail("expected manifold (P(n,V), pt, empty, gamma(...), gamma*(...))");
  }
  if (c.accept("^")) {
    std::size_t pat = c.pos();
    int e = c.small_int();
    if (e < 0) c.fail_at(pat, "negative power");
    return ManifoldExpr::product(std::vector<ManifoldExpr>(static_cast<std::size_t>(e), base));
  }
  return base;
}

inline std::pair<Integer, ManifoldExpr> manifold_term(Cursor& c) {
  Integer w = 1;
  if (c.digit_next()) {
    w = c.unsigned_integer();
    c.expect("*");
  }
  std::vector<ManifoldExpr> fs{manifold_factor(c)};
  while (c.starts_with("x") && !c.starts_with("xx")) {
    c.accept("x");
    fs.push_back(manifold_factor(c));
  }
  return {w, ManifoldExpr::product(std::move(fs))};
}

inline ManifoldExpr manifold_union(Cursor& c) {
  std::vector<std::pair<Integer, ManifoldExpr>> parts;
  bool neg = c.accept("-");
  auto t = manifold_term(c);
  if (neg) t.first = -t.first;
  parts.push_back(std::move(t));
  while (true) {
    bool plus = c.accept("+");
    if (!plus && !c.accept("-")) break;
    auto u = manifold_term(c);
    if (!plus) u.first = -u.first;
    parts.push_back(std::move(u));
  }
  if (parts.size() == 1 && parts.front().first == 1) return parts.front().second;
  return ManifoldExpr::disjoint_union(std::move(parts));
}

}  // namespace detail

/// Grammar: union := term (('+'|'-') term)*; term := [int '*'] factor ('x'
/// factor)*; factor := P(n,V) | pt | empty | gamma(union) | gamma*(union) |
/// '(' union ')', optionally followed by '^' power.
inline ManifoldExpr parse_manifold(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail("empty expression");
  ManifoldExpr m = detail::manifold_union(c);
  c.finish();
  return m;
}

// ---------------------------------------------------------------------------
// Fixed-point data.

struct FixedPoint {
  Integer weight = 1;
  int k = 0;  // rho-normal lines
  int l = 0;  // rho*-normal lines
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct FixedPointSet {
  std::vector<FixedPoint> points;

  /// Weights merged by (k,l), zeros dropped.
  std::map<std::pair<int, int>, Integer> merged() const {
    std::map<std::pair<int, int>, Integer> m;
    for (const auto& p : points) {
      if (p.k < 0 || p.l < 0) throw ValidationError("fixed point with negative normal-line count");
      m[{p.k, p.l}] += p.weight;
    }
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
  }

  FixedPointSet canonical() const {
    FixedPointSet r;
    for (const auto& [kl, w] : merged()) r.points.push_back({w, kl.first, kl.second});
    return r;
  }

  /// Sum of weight * e_r^-k e_s^-l.
  PhiElement lambda() const {
    PhiElement r;
    for (const auto& [kl, w] : merged()) r.add_term(PhiMonomial{-kl.first, -kl.second, {}}, Coeff(w));
    return r;
  }
};

namespace detail {

using PointMap = std::map<std::pair<int, int>, Integer>;

inline PointMap fixed_map(const ManifoldExpr& m) {
  switch (m.kind()) {
    case ManifoldKind::pc:
      if (m.index() != 1)
        throw ValidationError("non-isolated fixed set: " + m.str() + " has a fixed CP^" +
                              std::to_string(m.index() - 1));
      return {{{1, 0}, 1}, {{0, 1}, 1}};
    case ManifoldKind::point: return {{{0, 0}, 1}};
    case ManifoldKind::disjoint_union: {
      PointMap r;
      for (const auto& [w, p] : m.parts())
        for (const auto& [kl, v] : fixed_map(p)) r[kl] += w * v;
      return r;
    }
    case ManifoldKind::product: {
      PointMap r{{{0, 0}, 1}};
      for (const auto& f : m.kids()) {
        PointMap next;
        for (const auto& [a, u] : r)
          for (const auto& [b, v] : fixed_map(f)) next[{a.first + b.first, a.second + b.second}] += u * v;
        r = std::move(next);
      }
      return r;
    }
    case ManifoldKind::gamma:
    case ManifoldKind::gamma_star:
      throw ValidationError("non-isolated fixed set: " + m.str() + " has fixed components of positive dimension");
  }
  return {};
}

}  // namespace detail

/// Fixed points of a manifold with isolated fixed points, merged and sorted.
inline FixedPointSet fixed_data(const ManifoldExpr& m) {
  FixedPointSet r;
  for (const auto& [kl, w] : detail::fixed_map(m))
    if (w != 0) r.points.push_back({w, kl.first, kl.second});
  return r;
}

// ---------------------------------------------------------------------------
// Realizability.

struct Witness {
  int degree = 0;  // n = k + l
  int index = 0;   // i = l
  Integer expected = 0;
  Integer actual = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DecompositionTerm {
  Integer multiplicity = 0;
  int power = 0;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

struct Realization {
  bool realizable = true;
  std::vector<DecompositionTerm> decomposition;  // sorted by power
  std::optional<Witness> witness;

  ManifoldExpr manifold() const {
    std::vector<std::pair<Integer, ManifoldExpr>> parts;
    for (const auto& t : decomposition) parts.emplace_back(t.multiplicity, ManifoldExpr::p1_power(t.power));
    return ManifoldExpr::disjoint_union(std::move(parts));
  }
};

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

/// Homogeneous rows: degree n -> (a_0, ..., a_n) with a_i the weight at
/// (k, l) = (n - i, i).
inline std::map<int, std::vector<Integer>> rows(const FixedPointSet& f) {
  std::map<int, std::vector<Integer>> out;
  for (const auto& [kl, w] : f.merged()) {
    int n = kl.first + kl.second;
    auto& row = out[n];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(kl.second)] = w;
  }
  return out;
}

}  // namespace detail

/// Closed form: each degree must be a multiple of a binomial row.
inline Realization realize(const FixedPointSet& f) {
  Realization r;
  for (const auto& [n, row] : detail::rows(f)) {
    const Integer& a0 = row[0];
    for (int i = 0; i <= n; ++i) {
      Integer expected = a0 * binomial(n, i);
      if (row[static_cast<std::size_t>(i)] != expected) {
        r.realizable = false;
        r.decomposition.clear();
        r.witness = Witness{n, i, expected, row[static_cast<std::size_t>(i)]};
        return r;
      }
    }
    if (a0 != 0) r.decomposition.push_back({a0, n});
  }
  return r;
}

namespace detail {

/// Coefficients of (e_r^-1 + e_s^-1)^n by repeated multiplication, indexed
/// by the e_s^-1 power.
inline std::vector<Integer> p1_row(int n) {
  std::vector<Integer> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return row;
}

/// Degree-n step of the induction: subtract a_0 P^n, multiply by e_s,
/// recurse. Returns the integer k with y = k P^(n-1), or nullopt if x is
/// not in Z[P].
inline std::optional<Integer> induct(const std::vector<Integer>& x) {
  const int n = static_cast<int>(x.size()) - 1;
  if (n == 0) return x[0];
  const Integer a0 = x[0];
  std::vector<Integer> diff = x;
  std::vector<Integer> pn = p1_row(n);
  for (int i = 0; i <= n; ++i) diff[static_cast<std::size_t>(i)] -= a0 * pn[static_cast<std::size_t>(i)];
  // diff has no e_r^-n term; multiplying by e_s lowers every l by one
  std::vector<Integer> y(diff.begin() + 1, diff.end());
  auto k = induct(y);
  if (!k) return std::nullopt;
  // y is e_s times something, so its augmentation vanishes, while
  // aug(k P^(n-1)) = k g_1^(n-1) with g_1^(n-1) nonzero: k must be zero.
  if (*k != 0) return std::nullopt;
  return a0;
}

}  // namespace detail

/// The inductive decision procedure, degree by degree.
inline Realization realize_iterative(const FixedPointSet& f) {
  Realization r;
  for (const auto& [n, row] : detail::rows(f)) {
    auto a0 = detail::induct(row);
    if (!a0) {
      r.realizable = false;
      r.decomposition.clear();
      return r;
    }
    if (*a0 != 0) r.decomposition.push_back({*a0, n});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Localization of manifolds.

struct ManifoldImage {
  PhiElement lambda;
  Coeff aug;
};

inline ManifoldImage lambda_manifold(const Engine& eng, const ManifoldExpr& m) {
  GammaTerm t = m.term();
  return {eng.lambda(t), eng.aug(t)};
}

inline Tri check_cobordant(const Engine& eng, const ManifoldExpr& m1, const ManifoldExpr& m2) {
  return vanishing(eng.lambda(m1.term()) - eng.lambda(m2.term()));
}

/// Fixed-set bookkeeping of gamma(M) (or gamma*(M)): the fixed data of M with
/// one extra normal line, a copy of M with the other line, and the correction
/// -aug(M) P(C + rho).
struct GammaFixedSemantics {
  PhiElement extra_line;
  PhiElement trivial_copy;
  PhiElement correction;
  PhiElement total() const { return extra_line + trivial_copy + correction; }
};

inline GammaFixedSemantics gamma_fixed_semantics(const Engine& eng, const ManifoldExpr& m, bool star = false) {
  auto [lam, a] = lambda_manifold(eng, m);
  Flavor f = star ? Flavor::s : Flavor::r;
  Flavor g = other(f);
  GammaFixedSemantics s;
  s.extra_line = lam * PhiElement::e(f, -1);
  s.trivial_copy = PhiElement(a) * PhiElement::e(g, -1);
  s.correction = -(PhiElement(a) * z_gen(1, Flavor::r));
  return s;
}

}  // namespace sfb
