#pragma once

// Normal forms over the `musf` basis, products, geometric membership and
// basis certification. Expansion into the basis goes through the lambda
// image: the basis is triangular for the leading-term order, so repeated
// subtraction of leading terms recovers the unique coordinates.

#include "sfb/basis.hpp"
#include "sfb/coeff.hpp"
#include "sfb/engine.hpp"
#include "sfb/phi.hpp"
#include "sfb/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfb {

struct NormalForm {
  std::map<BasisMonomial, Coeff> terms;
  PhiElement lambda;
  Coeff aug;

  bool is_zero() const { return terms.empty(); }

  GammaTerm term() const {
    std::vector<GammaTerm> ks;
    for (const auto& [b, c] : terms) {
      if (c == Coeff(1)) {
        ks.push_back(b.term());
      } else if (b.is_unit()) {
        ks.push_back(GammaTerm::constant(c));
      } else {
        ks.push_back(GammaTerm::constant(c) * b.term());
      }
    }
    return GammaTerm::sum(std::move(ks));
  }
  std::string str() const { return term().str(); }

  /// Degrees carried by the basis part (monomial degree plus coefficient degree).
  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [b, c] : terms)
      for (const auto& [cm, v] : c.terms()) ds.push_back(b.degree() + cm.degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
  }

  friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.terms == y.terms; }
};

struct NormalizeOptions {
  bool check_lambda = true;
  RewriteOptions rewrite;
};

enum class Tri : std::uint8_t { yes, no, unknown };

inline std::string_view tri_name(Tri t) {
  return t == Tri::yes ? "true" : t == Tri::no ? "false" : "unknown";
}

struct GeometricResult {
  Tri answer = Tri::yes;
  PhiElement c_part;  // projection of lambda onto the complement of F
};

/// Reading of a C-part or a difference: zero is yes; any coefficient free of
/// A-symbols makes it definitely nonzero; otherwise it depends on the values
/// assigned to the A-symbols.
inline Tri vanishing(const PhiElement& p) {
  if (p.is_zero()) return Tri::yes;
  for (const auto& [m, c] : p.terms())
    if (!c.has_aug()) return Tri::no;
  return Tri::unknown;
}

class Calculus {
 public:
  explicit Calculus(ZConvention conv = ZConvention::same_flavor) : engine_(conv) {}

  const Engine& engine() const { return engine_; }

  PhiElement lambda(const GammaTerm& t) const { return engine_.lambda(t); }
  Coeff aug(const GammaTerm& t) const { return engine_.aug(t); }

  ZPresentation basis_image(const BasisMonomial& b) const {
    if (auto it = zcache_.find(b); it != zcache_.end()) return it->second;
    ZPresentation z = to_z_basis(engine_.lambda(b.term()), engine_.convention());
    zcache_.emplace(b, z);
    return z;
  }

  /// Expansion of a lambda image in the `musf` basis.
  NormalForm expand(const PhiElement& image, std::size_t step_budget = default_step_budget()) const {
    NormalForm nf;
    nf.lambda = image;
    ZPresentation rem = to_z_basis(image, engine_.convention());
    std::size_t steps = 0;
    while (!rem.is_zero()) {
      if (++steps > step_budget)
        throw StepBudgetExceeded("basis expansion exceeded the step budget");
      auto [lm, c] = leading_term(rem);
      auto b = musf_for_leading(lm);
      if (!b) throw EngineError("no basis element leads with " + lm.str() + " (remainder " + rem.str() + ")");
      ZPresentation img = basis_image(*b);
      auto [blm, bc] = leading_term(img);
      if (!(blm == lm) || !bc.is_constant() || (bc.constant_value() != 1 && bc.constant_value() != -1))
        throw EngineError("basis element " + b->str() + " does not lead with " + lm.str());
      Coeff factor = c * bc;  // bc is a unit
      rem -= ZPresentation(factor) * img;
      auto [it, inserted] = nf.terms.try_emplace(*b, factor);
      if (!inserted) {
        it->second += factor;
        if (it->second.is_zero()) nf.terms.erase(it);
      }
    }
    for (const auto& [b, c] : nf.terms) nf.aug += c * engine_.aug(b.term());
    return nf;
  }

  NormalForm normalize(const GammaTerm& t, const NormalizeOptions& opts = {}) const {
    GammaTerm reduced = engine_.rewrite(t, opts.rewrite);
    PhiElement image = engine_.lambda(reduced);
    if (opts.check_lambda) {
      PhiElement direct = engine_.lambda(t);
      if (!(image == direct))
        throw LambdaCheckFailure("lambda changed under rewriting: " + direct.str() + " vs " + image.str());
    }
    NormalForm nf = expand(image, opts.rewrite.step_budget);
    if (opts.check_lambda) {
      Coeff direct = engine_.aug(t);
      if (!(nf.aug == direct))
        throw LambdaCheckFailure("augmentation of normal form " + nf.aug.str() + " differs from " + direct.str());
    }
    return nf;
  }

  NormalForm mul(const NormalForm& a, const NormalForm& b) const {
    return normalize(a.term() * b.term());
  }

  GeometricResult is_geometric(const NormalForm& a) const {
    GeometricResult r;
    r.c_part = a.lambda.project_C();
    r.answer = vanishing(r.c_part);
    return r;
  }

 private:
  Engine engine_;
  mutable std::map<BasisMonomial, ZPresentation> zcache_;
};

inline PhiElement substitute_aug(const PhiElement& p, const AugAssignments& assign) {
  return p.map_coeffs([&assign](const Coeff& c) { return substitute_aug(c, assign); });
}

inline NormalForm substitute_aug(const NormalForm& nf, const AugAssignments& assign) {
  NormalForm r;
  for (const auto& [b, c] : nf.terms) {
    Coeff v = substitute_aug(c, assign);
    if (!v.is_zero()) r.terms.emplace(b, std::move(v));
  }
  r.lambda = substitute_aug(nf.lambda, assign);
  r.aug = substitute_aug(nf.aug, assign);
  return r;
}

// ---------------------------------------------------------------------------
// Certification.

struct DegreeReport {
  int degree = 0;
  std::size_t count = 0;
  std::optional<long long> expected;  // geometric variants only
  std::vector<std::pair<std::string, std::string>> collisions;
  std::vector<std::string> non_unit;
  std::vector<std::string> non_geometric;

  bool ok() const {
    return collisions.empty() && non_unit.empty() && non_geometric.empty() &&
           (!expected || static_cast<long long>(count) == *expected);
  }
};

struct CertifyReport {
  BasisVariant variant = BasisVariant::musf;
  int truncation = 0;
  std::vector<DegreeReport> degrees;

  bool ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.ok(); });
  }
};

/// Triangularity check on an explicit candidate list of one degree.
inline DegreeReport certify_candidates(const Calculus& calc, int degree,
                                       const std::vector<BasisMonomial>& cands, bool geometric) {
  DegreeReport rep;
  rep.degree = degree;
  rep.count = cands.size();
  std::map<ZMonomial, std::string> seen;
  for (const auto& b : cands) {
    ZPresentation img = calc.basis_image(b);
    if (geometric && !from_z_basis(img, calc.engine().convention()).is_in_F())
      rep.non_geometric.push_back(b.str());
    if (img.is_zero()) {
      rep.non_unit.push_back(b.str());
      continue;
    }
    auto [lm, c] = leading_term(img);
    if (!c.is_constant() || (c.constant_value() != 1 && c.constant_value() != -1))
      rep.non_unit.push_back(b.str());
    auto [it, inserted] = seen.try_emplace(lm, b.str());
    if (!inserted) rep.collisions.emplace_back(it->second, b.str());
  }
  return rep;
}

/// Certify every even degree in [low, high]. Geometric variants start at 2
/// and also check the count against F-rank minus one.
inline CertifyReport certify_basis(const Calculus& calc, int low, int high, BasisVariant v, int truncation) {
  CertifyReport rep{v, truncation, {}};
  const bool geometric = is_geometric_variant(v);
  if (geometric) low = std::max(low, 2);
  if (low % 2 != 0) ++low;
  for (int d = low; d <= high; d += 2) {
    auto cands = enumerate_basis(d, v, truncation);
    DegreeReport dr = certify_candidates(calc, d, cands, geometric);
    if (geometric) dr.expected = f_monomial_count(d) - 1;
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

}  // namespace sfb
