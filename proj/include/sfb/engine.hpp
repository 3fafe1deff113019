#pragma once

// Augmentation, localization (lambda) and rewriting of Gamma terms.
//
// Rewriting drives a term into Gamma_s-form: no Gamma_r, bar or sigma nodes,
// and Gamma_s applied only to e_r (once) or to towers Gamma_s^j(Z(n,V)). The
// augmentation of a Gamma_s-form term is read off directly; towers over
// Z(n,V) become formal symbols A(j;Z(n,V)).

#include "sfb/coeff.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sfb {

/// Engine failure that signals a bug rather than bad input.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LambdaCheckFailure : public EngineError {
 public:
  using EngineError::EngineError;
};

class StepBudgetExceeded : public EngineError {
 public:
  using EngineError::EngineError;
};

/// Rewrite step budget; SFB_STEP_BUDGET overrides the default of 10^6.
inline std::size_t default_step_budget() {
  if (const char* env = std::getenv("SFB_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

enum class Strategy : std::uint8_t { innermost, random };

struct RewriteOptions {
  Strategy strategy = Strategy::innermost;
  std::uint64_t seed = 0;
  std::size_t step_budget = default_step_budget();
};

enum class Rule : std::uint8_t {
  sigma,
  z1_flavor,
  bar,
  sum_flatten,
  prod_flatten,
  gamma_const,
  gamma_euler,
  gamma_linear,
  euler_cancel,
  product_formula,
  p1,
  gamma_s_tower,
  flavor_swap,
};

inline constexpr Rule kAllRules[] = {
    Rule::sigma,        Rule::z1_flavor,       Rule::bar, Rule::sum_flatten,
    Rule::prod_flatten, Rule::gamma_const,     Rule::gamma_euler, Rule::gamma_linear,
    Rule::euler_cancel, Rule::product_formula, Rule::p1,  Rule::gamma_s_tower,
    Rule::flavor_swap,
};

class Engine {
 public:
  explicit Engine(ZConvention conv = ZConvention::same_flavor) : conv_(conv) {}

  ZConvention convention() const { return conv_; }

  /// Augmentation (forget the action), valued in the coefficient ring.
  Coeff aug(const GammaTerm& t) const {
    switch (t.kind()) {
      case TermKind::coeff:
      case TermKind::sigma: return t.coeff();
      case TermKind::euler: return Coeff();
      case TermKind::zgen: return cp(t.index());
      case TermKind::bar: return aug(t.kid());
      case TermKind::sum: {
        Coeff r;
        for (const auto& k : t.kids()) r += aug(k);
        return r;
      }
      case TermKind::prod: {
        Coeff r(1);
        for (const auto& k : t.kids()) {
          r *= aug(k);
          if (r.is_zero()) break;
        }
        return r;
      }
      case TermKind::gamma:
        if (t.flavor() == Flavor::r) return -aug_gamma_s(t.kid());
        return aug_gamma_s(t.kid());
    }
    throw EngineError("aug: unknown node");
  }

  /// Localization map lambda into Phi.
  PhiElement lambda(const GammaTerm& t) const {
    switch (t.kind()) {
      case TermKind::coeff:
      case TermKind::sigma: return PhiElement(t.coeff());
      case TermKind::euler: return PhiElement::e(t.flavor());
      case TermKind::zgen: return z_gen(t.index(), t.flavor(), conv_);
      case TermKind::bar: return PhiElement(aug(t.kid()));
      case TermKind::sum: {
        PhiElement r;
        for (const auto& k : t.kids()) r += lambda(k);
        return r;
      }
      case TermKind::prod: {
        PhiElement r(1);
        for (const auto& k : t.kids()) {
          r *= lambda(k);
          if (r.is_zero()) break;
        }
        return r;
      }
      case TermKind::gamma: {
        std::string key = t.str();
        if (auto it = lambda_memo_.find(key); it != lambda_memo_.end()) return it->second;
        PhiElement inner = lambda(t.kid()) - PhiElement(aug(t.kid()));
        PhiElement r = t.flavor() == Flavor::r ? inner.shifted(-1, 0) : inner.shifted(0, -1);
        lambda_memo_.emplace(std::move(key), r);
        return r;
      }
    }
    throw EngineError("lambda: unknown node");
  }

  /// One application of Gamma_V(y) = P*(y - bar y) - Gamma_V'(y), with the
  /// bar evaluated.
  GammaTerm flavor_swap(const GammaTerm& t) const {
    if (t.kind() != TermKind::gamma) throw ValidationError("the flavor swap applies to G_r(...) or G_s(...) only");
    const GammaTerm& y = t.kid();
    Coeff ybar = aug(y);
    GammaTerm diff = ybar.is_zero() ? y : GammaTerm::sum({y, GammaTerm::constant(-ybar)});
    return GammaTerm::z(1, Flavor::r) * diff - GammaTerm::gamma(other(t.flavor()), y);
  }

  /// Apply one rule at the root of t, if it matches.
  std::optional<GammaTerm> apply(Rule rule, const GammaTerm& t) const;

  /// Rewrite to Gamma_s-form under the given strategy.
  GammaTerm rewrite(const GammaTerm& t, const RewriteOptions& opts = {}) const;

  std::size_t aug_cache_size() const { return aug_memo_.size(); }
  void clear_caches() const {
    aug_memo_.clear();
    lambda_memo_.clear();
  }

  /// Augmentation of a term already in Gamma_s-form.
  Coeff aug_reduced(const GammaTerm& t) const {
    switch (t.kind()) {
      case TermKind::coeff:
      case TermKind::sigma: return t.coeff();
      case TermKind::euler: return Coeff();
      case TermKind::zgen: return cp(t.index());
      case TermKind::sum: {
        Coeff r;
        for (const auto& k : t.kids()) r += aug_reduced(k);
        return r;
      }
      case TermKind::prod: {
        Coeff r(1);
        for (const auto& k : t.kids()) r *= aug_reduced(k);
        return r;
      }
      case TermKind::gamma: {
        if (t.flavor() != Flavor::s) break;
        if (t.kid().kind() == TermKind::euler && t.kid().flavor() == Flavor::r) return Coeff(-1);
        int depth = 0;
        const GammaTerm* cur = &t;
        while (cur->kind() == TermKind::gamma && cur->flavor() == Flavor::s) {
          ++depth;
          cur = &cur->kid();
        }
        if (cur->kind() != TermKind::zgen) break;
        return Coeff::aug_symbol(AugSymbol{depth, cur->str(), 2 * cur->index() + 2 * depth});
      }
      default: break;
    }
    throw EngineError("aug: term not in Gamma_s-form: " + t.str());
  }

 private:
  Coeff aug_gamma_s(const GammaTerm& y) const {
    std::string key = y.str();
    if (auto it = aug_memo_.find(key); it != aug_memo_.end()) return it->second;
    Coeff v = aug_reduced(rewrite(GammaTerm::gamma(Flavor::s, y)));
    aug_memo_.emplace(std::move(key), v);
    return v;
  }

  ZConvention conv_;
  mutable std::unordered_map<std::string, Coeff> aug_memo_;
  mutable std::unordered_map<std::string, PhiElement> lambda_memo_;
};

namespace detail {

inline bool is_euler(const GammaTerm& t, Flavor f) {
  return t.kind() == TermKind::euler && t.flavor() == f;
}

}  // namespace detail

inline std::optional<GammaTerm> Engine::apply(Rule rule, const GammaTerm& t) const {
  using detail::is_euler;
  const bool is_gamma = t.kind() == TermKind::gamma;
  switch (rule) {
    case Rule::sigma:
      if (t.kind() == TermKind::sigma) return GammaTerm::constant(t.coeff());
      return std::nullopt;
    case Rule::z1_flavor:
      if (t.kind() == TermKind::zgen && t.index() == 1 && t.flavor() == Flavor::s)
        return GammaTerm::z(1, Flavor::r);
      return std::nullopt;
    case Rule::bar:
      if (t.kind() == TermKind::bar) return GammaTerm::constant(aug(t.kid()));
      return std::nullopt;
    case Rule::sum_flatten: {
      if (t.kind() != TermKind::sum) return std::nullopt;
      bool change = false;
      std::vector<GammaTerm> ks;
      for (const auto& k : t.kids()) {
        if (k.kind() == TermKind::sum) {
          change = true;
          ks.insert(ks.end(), k.kids().begin(), k.kids().end());
        } else if (k.is_zero()) {
          change = true;
        } else {
          ks.push_back(k);
        }
      }
      if (!change) return std::nullopt;
      return GammaTerm::sum(std::move(ks));
    }
    case Rule::prod_flatten: {
      if (t.kind() != TermKind::prod) return std::nullopt;
      bool change = false;
      int coeffs = 0;
      Coeff c(1);
      std::vector<GammaTerm> rest;
      for (const auto& k : t.kids()) {
        if (k.kind() == TermKind::prod) {
          change = true;
          for (const auto& kk : k.kids()) {
            if (kk.is_coeff()) {
              c *= kk.coeff();
              ++coeffs;
            } else {
              rest.push_back(kk);
            }
          }
        } else if (k.is_coeff()) {
          c *= k.coeff();
          ++coeffs;
        } else {
          rest.push_back(k);
        }
      }
      if (c.is_zero()) return GammaTerm::constant(0);
      if (coeffs > 1 || (coeffs == 1 && c == Coeff(1))) change = true;
      if (coeffs == 1 && !t.kids().front().is_coeff()) change = true;
      if (!change) return std::nullopt;
      if (!(c == Coeff(1))) rest.insert(rest.begin(), GammaTerm::constant(c));
      return GammaTerm::prod(std::move(rest));
    }
    case Rule::gamma_const:
      if (is_gamma && (t.kid().is_coeff() || t.kid().kind() == TermKind::sigma))
        return GammaTerm::constant(0);
      return std::nullopt;
    case Rule::gamma_euler:
      if (is_gamma && is_euler(t.kid(), t.flavor())) return GammaTerm::constant(1);
      return std::nullopt;
    case Rule::gamma_linear: {
      if (!is_gamma || t.kid().kind() != TermKind::sum) return std::nullopt;
      std::vector<GammaTerm> ks;
      for (const auto& k : t.kid().kids()) ks.push_back(GammaTerm::gamma(t.flavor(), k));
      return GammaTerm::sum(std::move(ks));
    }
    case Rule::euler_cancel: {
      // Gamma_V(e_V * x) = x
      if (!is_gamma || t.kid().kind() != TermKind::prod) return std::nullopt;
      const auto& fs = t.kid().kids();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!is_euler(fs[i], t.flavor())) continue;
        std::vector<GammaTerm> rest;
        for (std::size_t k = 0; k < fs.size(); ++k)
          if (k != i) rest.push_back(fs[k]);
        return GammaTerm::prod(std::move(rest));
      }
      return std::nullopt;
    }
    case Rule::product_formula: {
      // Gamma(w z) = Gamma(w) z + bar(w) Gamma(z)
      if (!is_gamma || t.kid().kind() != TermKind::prod) return std::nullopt;
      const auto& fs = t.kid().kids();
      GammaTerm w = fs.front();
      GammaTerm z = GammaTerm::prod(std::vector<GammaTerm>(fs.begin() + 1, fs.end()));
      if (w.is_coeff()) return w * GammaTerm::gamma(t.flavor(), z);
      return GammaTerm::gamma(t.flavor(), w) * z + GammaTerm::bar(w) * GammaTerm::gamma(t.flavor(), z);
    }
    case Rule::p1:
      // Gamma_r Gamma_s (e_r) = P
      if (is_gamma && t.flavor() == Flavor::r && t.kid().kind() == TermKind::gamma &&
          t.kid().flavor() == Flavor::s && is_euler(t.kid().kid(), Flavor::r))
        return GammaTerm::z(1, Flavor::r);
      return std::nullopt;
    case Rule::gamma_s_tower:
      // Gamma_s Gamma_s (e_r) = P * Gamma_s(e_r)
      if (is_gamma && t.flavor() == Flavor::s && t.kid().kind() == TermKind::gamma &&
          t.kid().flavor() == Flavor::s && is_euler(t.kid().kid(), Flavor::r))
        return GammaTerm::z(1, Flavor::r) * t.kid();
      return std::nullopt;
    case Rule::flavor_swap:
      if (!is_gamma || t.flavor() != Flavor::r) return std::nullopt;
      return GammaTerm::z(1, Flavor::r) * (t.kid() - GammaTerm::bar(t.kid())) -
             GammaTerm::gamma(Flavor::s, t.kid());
  }
  return std::nullopt;
}

namespace detail {

class Rewriter {
 public:
  Rewriter(const Engine& eng, const RewriteOptions& opts)
      : eng_(eng), opts_(opts), rng_(opts.seed) {}

  GammaTerm run(const GammaTerm& t) {
    return opts_.strategy == Strategy::innermost ? innermost(t) : random_walk(t);
  }

 private:
  void tick(const GammaTerm& t) {
    if (++steps_ > opts_.step_budget)
      throw StepBudgetExceeded("rewrite step budget of " + std::to_string(opts_.step_budget) +
                               " exhausted while rewriting " + t.str().substr(0, 200));
  }

  std::optional<GammaTerm> first_rule(const GammaTerm& t) {
    for (Rule r : kAllRules)
      if (auto out = eng_.apply(r, t)) return out;
    return std::nullopt;
  }

  GammaTerm innermost(const GammaTerm& t) {
    if (t.kind() == TermKind::bar) {
      tick(t);
      return GammaTerm::constant(eng_.aug(t.kid()));
    }
    GammaTerm cur = t;
    if (!t.kids().empty()) {
      std::vector<GammaTerm> ks;
      ks.reserve(t.kids().size());
      bool changed = false;
      for (const auto& k : t.kids()) {
        ks.push_back(innermost(k));
        changed = changed || !(ks.back() == k);
      }
      if (changed) cur = t.with_kids(std::move(ks));
    }
    if (auto out = first_rule(cur)) {
      tick(cur);
      return innermost(*out);
    }
    return cur;
  }

  struct Redex {
    std::vector<std::size_t> path;
    Rule rule;
  };

  void collect(const GammaTerm& t, std::vector<std::size_t>& path, std::vector<Redex>& out) {
    for (Rule r : kAllRules)
      if (applicable(r, t)) out.push_back({path, r});
    if (t.kind() == TermKind::bar) return;
    for (std::size_t i = 0; i < t.kids().size(); ++i) {
      path.push_back(i);
      collect(t.kids()[i], path, out);
      path.pop_back();
    }
  }

  bool applicable(Rule r, const GammaTerm& t) {
    // bar evaluation is the only rule with a costly result; test it by shape.
    if (r == Rule::bar) return t.kind() == TermKind::bar;
    return eng_.apply(r, t).has_value();
  }

  GammaTerm replace(const GammaTerm& t, const std::vector<std::size_t>& path, std::size_t depth,
                    Rule rule) {
    if (depth == path.size()) return *eng_.apply(rule, t);
    std::vector<GammaTerm> ks = t.kids();
    ks[path[depth]] = replace(ks[path[depth]], path, depth + 1, rule);
    return t.with_kids(std::move(ks));
  }

  GammaTerm random_walk(GammaTerm t) {
    std::vector<Redex> redexes;
    std::vector<std::size_t> path;
    while (true) {
      redexes.clear();
      collect(t, path, redexes);
      if (redexes.empty()) return t;
      tick(t);
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      const Redex& r = redexes[pick(rng_)];
      t = replace(t, r.path, 0, r.rule);
    }
  }

  const Engine& eng_;
  RewriteOptions opts_;
  std::mt19937_64 rng_;
  std::size_t steps_ = 0;
};

}  // namespace detail

inline GammaTerm Engine::rewrite(const GammaTerm& t, const RewriteOptions& opts) const {
  detail::Rewriter rw(*this, opts);
  return rw.run(t);
}

}  // namespace sfb
