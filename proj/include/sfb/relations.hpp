#pragma once

// Identities of the Gamma calculus, checked under lambda on random samples.

#include "sfb/calculus.hpp"
#include "sfb/engine.hpp"
#include "sfb/random.hpp"
#include "sfb/term.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sfb {

struct RelationCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t nonzero = 0;
  bool expect_zero = true;
  std::optional<std::string> first_nonzero;  // "instance: residue"

  bool ok() const { return expect_zero ? nonzero == 0 : nonzero > 0; }
};

struct RelationReport {
  std::uint64_t seed = 0;
  std::vector<RelationCheck> checks;
  PhiElement literal_residue_at_es;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

namespace relation {

using T = GammaTerm;

inline T P() { return T::z(1, Flavor::r); }
inline T e(Flavor f) { return T::euler(f); }
inline T G(Flavor f, T x) { return T::gamma(f, std::move(x)); }
inline T bar(T x) { return T::bar(std::move(x)); }

/// e_V G_V(x) - (x - bar x)
inline T euler_times_gamma(Flavor f, const T& x) { return e(f) * G(f, x) - (x - bar(x)); }
/// G_V(x)(y - bar y) - (x - bar x) G_V(y)
inline T exchange(Flavor f, const T& x, const T& y) {
  return G(f, x) * (y - bar(y)) - (x - bar(x)) * G(f, y);
}
/// G_V(e_V x) - x
inline T euler_cancel(Flavor f, const T& x) { return G(f, e(f) * x) - x; }
/// G_s G_r(x) - G_r G_s(x) - bar(G_s x) P
inline T commute_corrected(const T& x) {
  return G(Flavor::s, G(Flavor::r, x)) - G(Flavor::r, G(Flavor::s, x)) - bar(G(Flavor::s, x)) * P();
}
/// The printed form, with bar(G_r x) as the coefficient.
inline T commute_literal(const T& x) {
  return G(Flavor::s, G(Flavor::r, x)) - G(Flavor::r, G(Flavor::s, x)) - bar(G(Flavor::r, x)) * P();
}
/// G_V(wz) - G_V(w) z - bar(w) G_V(z)
inline T product_formula(Flavor f, const T& w, const T& z) {
  return G(f, w * z) - G(f, w) * z - bar(w) * G(f, z);
}
/// G_s(y) - P(y - bar y) + G_r(y)
inline T flavor_swap(const T& y) { return G(Flavor::s, y) - P() * (y - bar(y)) + G(Flavor::r, y); }

}  // namespace relation

/// Evaluate every identity on `samples` seeded random instances. Geometric
/// instances (for the gamma/gamma* relations) use Z generators only.
inline RelationReport verify_relations(const Engine& eng, std::size_t samples, std::uint64_t seed,
                                       const TermShape& shape = {}) {
  namespace R = relation;
  RelationReport rep;
  rep.seed = seed;
  Rng rng(seed);
  TermShape geo = shape;
  geo.eulers = false;

  struct Identity {
    std::string name;
    bool expect_zero;
    std::function<GammaTerm(Rng&)> build;
  };
  auto rand_flavor = [](Rng& r) { return detail::uniform(r, 0, 1) ? Flavor::s : Flavor::r; };
  std::vector<Identity> identities = {
      {"euler_times_gamma", true,
       [&](Rng& r) { return R::euler_times_gamma(rand_flavor(r), random_term(r, shape)); }},
      {"exchange", true,
       [&](Rng& r) {
         auto x = random_term(r, shape);
         return R::exchange(rand_flavor(r), x, random_term(r, shape));
       }},
      {"euler_cancel", true, [&](Rng& r) { return R::euler_cancel(rand_flavor(r), random_term(r, shape)); }},
      {"commute_corrected", true, [&](Rng& r) { return R::commute_corrected(random_term(r, shape)); }},
      {"commute_literal", false, [&](Rng& r) { return R::commute_literal(random_term(r, shape)); }},
      {"bar_euler", true,
       [&](Rng& r) { return GammaTerm::bar(GammaTerm::euler(rand_flavor(r))); }},
      {"product_formula", true,
       [&](Rng& r) {
         auto w = random_term(r, shape);
         return R::product_formula(rand_flavor(r), w, random_term(r, shape));
       }},
      {"flavor_swap", true, [&](Rng& r) { return R::flavor_swap(random_term(r, shape)); }},
      {"geometric_exchange", true,
       [&](Rng& r) {
         auto x = random_term(r, geo);
         return R::exchange(Flavor::r, x, random_term(r, geo));
       }},
      {"geometric_commute", true, [&](Rng& r) { return R::commute_corrected(random_term(r, geo)); }},
  };

  for (const auto& s : identities) {
    RelationCheck chk{s.name, samples, 0, s.expect_zero, std::nullopt};
    for (std::size_t i = 0; i < samples; ++i) {
      GammaTerm t = s.build(rng);
      PhiElement res = eng.lambda(t);
      if (!res.is_zero()) {
        ++chk.nonzero;
        if (!chk.first_nonzero) chk.first_nonzero = t.str() + " : " + res.str();
      }
    }
    rep.checks.push_back(std::move(chk));
  }
  rep.literal_residue_at_es = eng.lambda(R::commute_literal(GammaTerm::euler(Flavor::s)));
  RelationCheck es{"commute_literal_at_e_s", 1, rep.literal_residue_at_es.is_zero() ? 0u : 1u, false,
                   std::nullopt};
  if (es.nonzero) es.first_nonzero = "e_s : " + rep.literal_residue_at_es.str();
  rep.checks.push_back(std::move(es));
  RelationCheck es2{"commute_corrected_at_e_s", 1,
                    eng.lambda(R::commute_corrected(GammaTerm::euler(Flavor::s))).is_zero() ? 0u : 1u, true,
                    std::nullopt};
  rep.checks.push_back(std::move(es2));
  return rep;
}

}  // namespace sfb
