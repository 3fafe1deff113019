// Command-line front end. Data goes to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 success/true/realizable, 1 false/rejected/unknown,
// 2 parse or validation error, 3 internal engine failure.

#include "sfb/sfb.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using sfb::Json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json tri_json(sfb::Tri t) {
  if (t == sfb::Tri::unknown) return "unknown";
  return t == sfb::Tri::yes;
}

int tri_exit(sfb::Tri t) { return t == sfb::Tri::yes ? kOk : kFalse; }

/// Inline JSON if the argument starts with '{' or '[', otherwise a path.
Json read_json_arg(const std::string& arg) {
  std::string text;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw sfb::ValidationError("cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw sfb::ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

/// Manifold grammar first, then the term grammar.
sfb::GammaTerm read_class(const std::string& text) {
  try {
    return sfb::parse_manifold(text).term();
  } catch (const sfb::ValidationError&) {
    return sfb::parse_term(text);
  }
}

Json normal_form_json(const sfb::NormalForm& nf) {
  return {{"text", nf.str()},
          {"normal_form", sfb::to_json(nf)},
          {"lambda", nf.lambda.str()},
          {"aug", nf.aug.str()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-free circle bordism calculator"};
  app.require_subcommand(1);

  std::string convention = "same";
  app.add_option("--z-convention", convention,
                 "Euler class paired with X(n-1,V) in Z(n,V): same (e_V) or opposite (e_V*)")
      ->check(CLI::IsMember({"same", "opposite"}));

  std::string expr;
  std::string expr2;
  std::string path;
  bool full = false;
  bool check_lambda = true;
  bool random_order = false;
  std::uint64_t seed = 0;
  int degree = 12;
  int low = -1000;
  int truncation = 6;
  std::string variant = "musf";
  std::size_t samples = 200;
  bool as_phi = false;

  auto* lambda = app.add_subcommand("lambda", "Localization image of an expression");
  lambda->add_option("expr", expr, "Gamma term or manifold expression")->required();
  lambda->add_flag("--full", full, "Print lambda as structured JSON with the augmentation");

  auto* normalize = app.add_subcommand("normalize", "Normal form in the additive basis");
  normalize->add_option("expr", expr, "Gamma term")->required();
  normalize->add_flag("--full", full, "Print the structured normal form");
  normalize->add_flag("--check-lambda,!--no-check-lambda", check_lambda,
                      "Compare lambda before and after rewriting (default on)");
  normalize->add_flag("--random-order", random_order, "Apply rewrite rules in seeded random order");
  normalize->add_option("--seed", seed, "Seed for --random-order");

  auto* geometric = app.add_subcommand("geometric", "Is the class geometric (in the image of Omega)?");
  geometric->add_option("expr", expr, "Gamma term or manifold expression")->required();

  auto* realize = app.add_subcommand("realize", "Realize isolated fixed-point data by products of P(C+rho)");
  realize->add_option("data", path, "Path to fixed-point JSON or inline JSON")->required();

  auto* fixed = app.add_subcommand("fixed", "Fixed-point data of a manifold with isolated fixed points");
  fixed->add_option("manifold", expr, "Manifold expression, e.g. \"P(1,r) x P(1,r)\"")->required();

  auto* cobordant = app.add_subcommand("cobordant", "Are two classes equal (equivariantly cobordant)?");
  cobordant->add_option("first", expr, "Manifold expression or Gamma term")->required();
  cobordant->add_option("second", expr2, "Manifold expression or Gamma term")->required();

  auto* basis = app.add_subcommand("basis", "Basis elements of one degree");
  auto* certify = app.add_subcommand("certify", "Check triangularity and ranks of a basis variant");
  for (auto* sub : {basis, certify}) {
    sub->add_option("--degree", degree, "Degree (basis) or upper degree bound (certify)");
    sub->add_option("--variant", variant, "musf, musf-literal, omega, omega-mirrored, omega-alt");
    sub->add_option("--truncation", truncation, "Bound on e_r and e_s exponents")->check(CLI::NonNegativeNumber);
  }
  certify->add_option("--low", low, "Lowest degree (default: lowest degree reachable within the truncation)");

  auto* verify = app.add_subcommand("verify", "Check the calculus identities under lambda on random samples");
  verify->add_option("--samples", samples, "Samples per identity");
  verify->add_option("--seed", seed, "Random seed");

  auto* subst = app.add_subcommand("subst", "Substitute values for A-symbols");
  subst->add_option("assignments", path, "Path to {symbol: coefficient} JSON or inline JSON")->required();
  subst->add_option("expr", expr, "Gamma term (or Phi element with --phi)")->required();
  subst->add_flag("--phi", as_phi, "Treat expr as a Phi element");
  subst->add_flag("--full", full, "Print the structured normal form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  const auto conv = convention == "same" ? sfb::ZConvention::same_flavor : sfb::ZConvention::opposite_flavor;
  sfb::Calculus calc(conv);

  try {
    if (*lambda) {
      sfb::GammaTerm t = read_class(expr);
      sfb::PhiElement p = calc.lambda(t);
      if (full) {
        emit({{"input", t.str()}, {"text", p.str()}, {"lambda", sfb::to_json(p)}, {"aug", calc.aug(t).str()}});
      } else {
        emit(p.str());
      }
      return kOk;
    }
    if (*normalize) {
      sfb::NormalizeOptions opts;
      opts.check_lambda = check_lambda;
      opts.rewrite.strategy = random_order ? sfb::Strategy::random : sfb::Strategy::innermost;
      opts.rewrite.seed = seed;
      sfb::NormalForm nf = calc.normalize(sfb::parse_term(expr), opts);
      if (full) {
        emit(normal_form_json(nf));
      } else {
        emit(nf.str());
      }
      return kOk;
    }
    if (*geometric) {
      sfb::NormalForm nf = calc.normalize(read_class(expr));
      auto g = calc.is_geometric(nf);
      emit({{"geometric", tri_json(g.answer)}, {"c_part", g.c_part.str()}});
      return tri_exit(g.answer);
    }
    if (*realize) {
      sfb::FixedPointSet f = sfb::fixed_points_from_json(read_json_arg(path));
      sfb::Realization r = sfb::realize(f);
      sfb::Realization check = sfb::realize_iterative(f);
      if (check.realizable != r.realizable || check.decomposition != r.decomposition)
        throw sfb::EngineError("closed-form and inductive realizability disagree");
      emit(sfb::to_json(r));
      return r.realizable ? kOk : kFalse;
    }
    if (*fixed) {
      emit(sfb::to_json(sfb::fixed_data(sfb::parse_manifold(expr))));
      return kOk;
    }
    if (*cobordant) {
      sfb::Tri t = sfb::vanishing(calc.lambda(read_class(expr)) - calc.lambda(read_class(expr2)));
      emit({{"cobordant", tri_json(t)}});
      return tri_exit(t);
    }
    if (*basis) {
      auto v = sfb::parse_variant(variant);
      auto elems = sfb::enumerate_basis(degree, v, truncation);
      Json arr = Json::array();
      for (const auto& b : elems) arr.push_back(sfb::to_json(b));
      emit({{"degree", degree},
            {"variant", std::string(sfb::variant_name(v))},
            {"truncation", truncation},
            {"count", elems.size()},
            {"elements", arr}});
      return kOk;
    }
    if (*certify) {
      auto v = sfb::parse_variant(variant);
      int lo = low == -1000 ? -4 * truncation : low;
      auto rep = sfb::certify_basis(calc, lo, degree, v, truncation);
      emit(sfb::to_json(rep));
      return rep.ok() ? kOk : kFalse;
    }
    if (*verify) {
      auto rep = sfb::verify_relations(calc.engine(), samples, seed);
      emit(sfb::to_json(rep));
      return rep.ok() ? kOk : kFalse;
    }
    if (*subst) {
      sfb::AugAssignments a = sfb::assignments_from_json(read_json_arg(path));
      if (as_phi) {
        emit(sfb::substitute_aug(sfb::parse_phi(expr, conv), a).str());
        return kOk;
      }
      sfb::NormalForm nf = sfb::substitute_aug(calc.normalize(sfb::parse_term(expr)), a);
      if (full) {
        emit(normal_form_json(nf));
      } else {
        emit(nf.str());
      }
      return kOk;
    }
  } catch (const sfb::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const sfb::EngineError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
