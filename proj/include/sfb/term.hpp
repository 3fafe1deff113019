#pragma once

// Expression trees over coefficients, Euler classes, Z(n,V), Gamma_r, Gamma_s,
// bar and sigma. Nodes are immutable and shared.

#include "sfb/coeff.hpp"
#include "sfb/phi.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfb {

enum class TermKind : std::uint8_t { coeff, euler, zgen, gamma, bar, sigma, sum, prod };

class GammaTerm {
 public:
  struct Node {
    TermKind kind;
    Coeff coeff;           // coeff, sigma
    Flavor flavor = Flavor::r;  // euler, zgen, gamma
    int n = 0;             // zgen index
    std::vector<GammaTerm> kids;
  };

  GammaTerm() : GammaTerm(constant(0)) {}

  static GammaTerm constant(Coeff c) { return GammaTerm(Node{TermKind::coeff, std::move(c), Flavor::r, 0, {}}); }
  static GammaTerm euler(Flavor f) { return GammaTerm(Node{TermKind::euler, {}, f, 0, {}}); }
  static GammaTerm z(int n, Flavor f) {
    if (n < 1) throw ValidationError("Z(n,V): index >= 1 required, got " + std::to_string(n));
    return GammaTerm(Node{TermKind::zgen, {}, f, n, {}});
  }
  static GammaTerm gamma(Flavor f, GammaTerm t) {
    return GammaTerm(Node{TermKind::gamma, {}, f, 0, {std::move(t)}});
  }
  static GammaTerm gamma_pow(Flavor f, int k, GammaTerm t) {
    for (int i = 0; i < k; ++i) t = gamma(f, std::move(t));
    return t;
  }
  static GammaTerm bar(GammaTerm t) { return GammaTerm(Node{TermKind::bar, {}, Flavor::r, 0, {std::move(t)}}); }
  static GammaTerm sigma(Coeff c) { return GammaTerm(Node{TermKind::sigma, std::move(c), Flavor::r, 0, {}}); }
  /// Sum node. A single summand is returned unchanged; no summands gives 0.
  static GammaTerm sum(std::vector<GammaTerm> ks) {
    if (ks.empty()) return constant(0);
    if (ks.size() == 1) return std::move(ks.front());
    return GammaTerm(Node{TermKind::sum, {}, Flavor::r, 0, std::move(ks)});
  }
  /// Product node. A single factor is returned unchanged; no factors gives 1.
  static GammaTerm prod(std::vector<GammaTerm> ks) {
    if (ks.empty()) return constant(1);
    if (ks.size() == 1) return std::move(ks.front());
    return GammaTerm(Node{TermKind::prod, {}, Flavor::r, 0, std::move(ks)});
  }
  /// P = Gamma_r Gamma_s (e_r), the class of P(C + rho).
  static GammaTerm p1() { return gamma(Flavor::r, gamma(Flavor::s, euler(Flavor::r))); }

  friend GammaTerm operator+(GammaTerm a, GammaTerm b) { return sum({std::move(a), std::move(b)}); }
  friend GammaTerm operator*(GammaTerm a, GammaTerm b) { return prod({std::move(a), std::move(b)}); }
  friend GammaTerm operator-(GammaTerm a, GammaTerm b) {
    return sum({std::move(a), prod({constant(-1), std::move(b)})});
  }

  TermKind kind() const { return node_->kind; }
  const Coeff& coeff() const { return node_->coeff; }
  Flavor flavor() const { return node_->flavor; }
  int index() const { return node_->n; }
  const std::vector<GammaTerm>& kids() const { return node_->kids; }
  const GammaTerm& kid() const { return node_->kids.front(); }

  /// Same node with the children replaced; sums and products re-collapse.
  GammaTerm with_kids(std::vector<GammaTerm> ks) const {
    switch (kind()) {
      case TermKind::sum: return sum(std::move(ks));
      case TermKind::prod: return prod(std::move(ks));
      default: {
        Node n = *node_;
        n.kids = std::move(ks);
        return GammaTerm(std::move(n));
      }
    }
  }
  std::size_t size() const {
    std::size_t s = 1;
    for (const auto& k : kids()) s += k.size();
    return s;
  }

  bool is_coeff() const { return kind() == TermKind::coeff; }
  bool is_zero() const { return is_coeff() && coeff().is_zero(); }

  /// Degree, or nullopt if the term mixes degrees. Zero is compatible with
  /// any degree.
  std::optional<int> degree() const {
    auto d = degree_info();
    if (d.mixed) return std::nullopt;
    return d.any ? std::optional<int>(0) : std::optional<int>(d.value);
  }

  /// Canonical text; parse(str()) reproduces the tree.
  std::string str() const {
    switch (kind()) {
      case TermKind::coeff: return coeff_atom(coeff());
      case TermKind::euler: return flavor() == Flavor::r ? "e_r" : "e_s";
      case TermKind::zgen:
        return "Z(" + std::to_string(index()) + "," + flavor_char(flavor()) + ")";
      case TermKind::gamma:
        return std::string(flavor() == Flavor::r ? "G_r(" : "G_s(") + kid().str() + ")";
      case TermKind::bar: return "bar(" + kid().str() + ")";
      case TermKind::sigma: return "sigma(" + coeff().str() + ")";
      case TermKind::sum: {
        std::string s;
        for (const auto& k : kids()) {
          if (!s.empty()) s += " + ";
          s += k.kind() == TermKind::sum ? "(" + k.str() + ")" : k.str();
        }
        return s;
      }
      case TermKind::prod: {
        std::string s;
        for (const auto& k : kids()) {
          if (!s.empty()) s += "*";
          bool wrap = k.kind() == TermKind::sum || k.kind() == TermKind::prod;
          s += wrap ? "(" + k.str() + ")" : k.str();
        }
        return s;
      }
    }
    return {};
  }

  friend bool operator==(const GammaTerm& a, const GammaTerm& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.kind == y.kind && x.coeff == y.coeff && x.flavor == y.flavor && x.n == y.n &&
           x.kids == y.kids;
  }

  static std::string coeff_atom(const Coeff& c) {
    if (c.is_constant() && c.constant_value() >= 0) return c.constant_value().str();
    if (c.terms().size() == 1) {
      const auto& [m, v] = *c.terms().begin();
      if (v == 1 && m.factors().size() == 1 && m.factors()[0].second == 1 &&
          m.factors()[0].first.kind == CoeffGen::Kind::cp)
        return m.str();
    }
    return "[" + c.str() + "]";
  }

 private:
  explicit GammaTerm(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  struct DegInfo {
    bool any = false;
    bool mixed = false;
    int value = 0;
  };

  static DegInfo coeff_degree(const Coeff& c) {
    DegInfo d{true, false, 0};
    for (const auto& [m, v] : c.terms()) {
      if (d.any) {
        d = {false, false, m.degree()};
      } else if (m.degree() != d.value) {
        d.mixed = true;
      }
    }
    return d;
  }

  DegInfo degree_info() const {
    switch (kind()) {
      case TermKind::coeff:
      case TermKind::sigma: return coeff_degree(coeff());
      case TermKind::euler: return {false, false, -2};
      case TermKind::zgen: return {false, false, 2 * index()};
      case TermKind::gamma: {
        auto d = kid().degree_info();
        if (!d.any) d.value += 2;
        return d;
      }
      case TermKind::bar: return kid().degree_info();
      case TermKind::sum: {
        DegInfo acc{true, false, 0};
        for (const auto& k : kids()) {
          auto d = k.degree_info();
          if (d.mixed) return d;
          if (d.any) continue;
          if (acc.any) {
            acc = d;
          } else if (acc.value != d.value) {
            acc.mixed = true;
          }
        }
        return acc;
      }
      case TermKind::prod: {
        DegInfo acc{false, false, 0};
        for (const auto& k : kids()) {
          auto d = k.degree_info();
          if (d.any) return d;
          if (d.mixed) acc.mixed = true;
          acc.value += d.value;
        }
        return acc;
      }
    }
    return {};
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace sfb
