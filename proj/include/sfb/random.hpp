#pragma once

// Seeded generators of random terms, coefficients and Phi elements.

#include "sfb/coeff.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <random>
#include <vector>

namespace sfb {

using Rng = std::mt19937_64;

struct TermShape {
  int max_z = 5;            // generators Z(1..max_z, V)
  int max_gamma_depth = 3;  // nesting of Gamma operations
  int max_size = 4;         // recursion budget for sums and products
  bool eulers = true;       // allow e_r, e_s
  bool extras = false;      // allow bar, sigma and non-trivial coefficients
};

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace detail

inline Coeff random_coeff(Rng& rng, int max_terms = 2, bool with_aug = false) {
  using detail::uniform;
  Coeff c;
  int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Coeff m(uniform(rng, -3, 3));
    int gens = uniform(rng, 0, 2);
    for (int g = 0; g < gens; ++g) {
      if (with_aug && uniform(rng, 0, 3) == 0) {
        int n = uniform(rng, 1, 3);
        int j = uniform(rng, 1, 2);
        Flavor f = uniform(rng, 0, 1) ? Flavor::s : Flavor::r;
        if (n == 1) f = Flavor::r;
        std::string key = "Z(" + std::to_string(n) + "," + flavor_char(f) + ")";
        m *= Coeff::aug_symbol(AugSymbol{j, key, 2 * n + 2 * j});
      } else {
        m *= cp(uniform(rng, 1, 3));
      }
    }
    c += m;
  }
  return c;
}

/// A generator of the basis alphabet: e_r, e_s or Z(n,V).
inline GammaTerm random_generator(Rng& rng, const TermShape& shape) {
  using detail::uniform;
  int pick = uniform(rng, shape.eulers ? 0 : 2, 2 + 2 * shape.max_z - 1);
  if (pick == 0) return GammaTerm::euler(Flavor::r);
  if (pick == 1) return GammaTerm::euler(Flavor::s);
  pick -= 2;
  return GammaTerm::z(pick / 2 + 1, pick % 2 ? Flavor::s : Flavor::r);
}

inline GammaTerm random_term(Rng& rng, const TermShape& shape, int depth_left = -1, int size_left = -1) {
  using detail::uniform;
  if (depth_left < 0) depth_left = shape.max_gamma_depth;
  if (size_left < 0) size_left = shape.max_size;
  int choice = uniform(rng, 0, 9);
  if (size_left <= 1 || choice <= 2) {
    if (shape.extras && uniform(rng, 0, 4) == 0) {
      return uniform(rng, 0, 1) ? GammaTerm::constant(random_coeff(rng, 2, true))
                                : GammaTerm::sigma(random_coeff(rng, 2, false));
    }
    return random_generator(rng, shape);
  }
  if (choice <= 5 && depth_left > 0) {
    Flavor f = uniform(rng, 0, 1) ? Flavor::s : Flavor::r;
    return GammaTerm::gamma(f, random_term(rng, shape, depth_left - 1, size_left - 1));
  }
  if (shape.extras && choice == 6) return GammaTerm::bar(random_term(rng, shape, depth_left, size_left - 1));
  int arity = uniform(rng, 2, 3);
  std::vector<GammaTerm> ks;
  for (int i = 0; i < arity; ++i) ks.push_back(random_term(rng, shape, depth_left, size_left / 2));
  if (choice <= 7) return GammaTerm::prod(std::move(ks));
  if (!shape.extras) {
    // keep sums homogeneous-ish by scaling with small integers
    for (auto& k : ks)
      if (uniform(rng, 0, 2) == 0) k = GammaTerm::constant(uniform(rng, -2, 2)) * k;
  }
  return GammaTerm::sum(std::move(ks));
}

/// Random Phi element with Euler exponents in [-3,3] and up to three X factors.
inline PhiElement random_phi(Rng& rng, int max_terms = 5) {
  using detail::uniform;
  PhiElement p;
  int terms = uniform(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t) {
    PhiElement m = PhiElement::e(Flavor::r, uniform(rng, -3, 3)) * PhiElement::e(Flavor::s, uniform(rng, -3, 3));
    int xs = uniform(rng, 0, 3);
    for (int k = 0; k < xs; ++k) m *= PhiElement::gen(uniform(rng, 1, 4), uniform(rng, 0, 1) ? Flavor::s : Flavor::r);
    Coeff c = random_coeff(rng, 2, uniform(rng, 0, 3) == 0);
    if (c.is_zero()) c = Coeff(uniform(rng, 1, 5));
    p += PhiElement(c) * m;
  }
  return p;
}

}  // namespace sfb
