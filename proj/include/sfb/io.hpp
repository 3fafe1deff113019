#pragma once

// JSON encodings of the library's values.

#include "sfb/calculus.hpp"
#include "sfb/coeff.hpp"
#include "sfb/manifold.hpp"
#include "sfb/parse.hpp"
#include "sfb/phi.hpp"
#include "sfb/relations.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace sfb {

using Json = nlohmann::ordered_json;

/// Integers fitting in 64 bits become numbers, larger ones strings.
inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer json_integer(const Json& j, const char* field) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Cursor c(j.get<std::string>());
    bool neg = c.accept("-");
    Integer v = c.unsigned_integer();
    c.finish();
    return neg ? Integer(-v) : v;
  }
  throw ValidationError(std::string("field '") + field + "' must be an integer");
}

template <class Tag>
Json to_json(const PhiPoly<Tag>& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json xs = Json::array();
    for (const auto& [g, e] : m.xs)
      for (int k = 0; k < e; ++k) xs.push_back(Json::array({g.n, std::string(1, flavor_char(g.flavor))}));
    arr.push_back({{"a", m.a}, {"b", m.b}, {"xs", xs}, {"coeff", c.str()}});
  }
  return arr;
}

inline PhiElement phi_from_json(const Json& arr) {
  if (!arr.is_array()) throw ValidationError("Phi element JSON must be an array of terms");
  PhiElement p;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b") || !t.contains("coeff"))
      throw ValidationError("Phi term needs fields a, b, coeff");
    PhiElement m = PhiElement::e(Flavor::r, t.at("a").get<int>()) * PhiElement::e(Flavor::s, t.at("b").get<int>());
    if (t.contains("xs")) {
      for (const auto& x : t.at("xs")) {
        if (!x.is_array() || x.size() != 2) throw ValidationError("xs entries are [n, \"r\"|\"s\"]");
        std::string f = x.at(1).get<std::string>();
        if (f != "r" && f != "s") throw ValidationError("flavor must be \"r\" or \"s\"");
        m *= PhiElement::gen(x.at(0).get<int>(), f == "r" ? Flavor::r : Flavor::s);
      }
    }
    p += PhiElement(parse_coeff(t.at("coeff").get<std::string>())) * m;
  }
  return p;
}

inline Json to_json(const NormalForm& nf) {
  Json arr = Json::array();
  for (const auto& [b, c] : nf.terms) {
    Json m = Json::array();
    for (const auto& g : b.m) m.push_back(g.str());
    arr.push_back({{"i", b.i},
                   {"j", b.j},
                   {"x", b.x ? Json(b.x->str()) : Json(nullptr)},
                   {"m", m},
                   {"coeff", c.str()}});
  }
  return arr;
}

inline Json to_json(const BasisMonomial& b) {
  Json m = Json::array();
  for (const auto& g : b.m) m.push_back(g.str());
  return {{"i", b.i}, {"j", b.j}, {"x", b.x ? Json(b.x->str()) : Json(nullptr)}, {"m", m},
          {"degree", b.degree()}, {"text", b.str()}};
}

inline Json to_json(const FixedPointSet& f) {
  Json pts = Json::array();
  for (const auto& p : f.points) pts.push_back({{"weight", integer_json(p.weight)}, {"rho", p.k}, {"rho_star", p.l}});
  return {{"points", pts}};
}

inline FixedPointSet fixed_points_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw ValidationError("fixed-point JSON must be an object with a \"points\" array");
  FixedPointSet f;
  for (const auto& p : j.at("points")) {
    if (!p.is_object()) throw ValidationError("each point must be an object");
    FixedPoint fp;
    fp.weight = p.contains("weight") ? json_integer(p.at("weight"), "weight") : Integer(1);
    if (!p.contains("rho") || !p.contains("rho_star")) throw ValidationError("each point needs rho and rho_star");
    if (!p.at("rho").is_number_integer() || !p.at("rho_star").is_number_integer())
      throw ValidationError("rho and rho_star must be integers");
    fp.k = p.at("rho").get<int>();
    fp.l = p.at("rho_star").get<int>();
    if (fp.k < 0 || fp.l < 0) throw ValidationError("rho and rho_star must be >= 0");
    f.points.push_back(fp);
  }
  return f;
}

inline Json to_json(const Realization& r) {
  if (r.realizable) {
    Json dec = Json::array();
    for (const auto& t : r.decomposition)
      dec.push_back({{"multiplicity", integer_json(t.multiplicity)}, {"power", t.power}});
    return {{"realizable", true}, {"decomposition", dec}};
  }
  Json j = {{"realizable", false}};
  if (r.witness)
    j["witness"] = {{"degree", r.witness->degree},
                    {"index", r.witness->index},
                    {"expected", integer_json(r.witness->expected)},
                    {"actual", integer_json(r.witness->actual)}};
  return j;
}

inline Json to_json(const CertifyReport& rep) {
  Json ds = Json::array();
  for (const auto& d : rep.degrees) {
    Json e = {{"degree", d.degree}, {"count", d.count}};
    if (d.expected) e["expected"] = *d.expected;
    Json col = Json::array();
    for (const auto& [a, b] : d.collisions) col.push_back(Json::array({a, b}));
    e["collisions"] = col;
    e["non_unit"] = d.non_unit;
    e["non_geometric"] = d.non_geometric;
    e["ok"] = d.ok();
    ds.push_back(e);
  }
  return {{"variant", std::string(variant_name(rep.variant))},
          {"truncation", rep.truncation},
          {"ok", rep.ok()},
          {"degrees", ds}};
}

inline Json to_json(const RelationReport& rep) {
  Json cs = Json::array();
  for (const auto& c : rep.checks) {
    Json e = {{"relation", c.name},
              {"samples", c.samples},
              {"nonzero", c.nonzero},
              {"expect", c.expect_zero ? "vanishes" : "residue"},
              {"ok", c.ok()}};
    if (c.first_nonzero) e["example"] = *c.first_nonzero;
    cs.push_back(e);
  }
  return {{"seed", rep.seed}, {"ok", rep.ok()}, {"literal_residue_at_e_s", rep.literal_residue_at_es.str()},
          {"relations", cs}};
}

/// {"A(1;Z(2,r))": "g1*g2", ...}
inline AugAssignments assignments_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("assignments must be a JSON object {symbol: coefficient}");
  AugAssignments a;
  for (const auto& [k, v] : j.items()) {
    Coeff sym = parse_coeff(k);
    bool single = sym.terms().size() == 1 && sym.terms().begin()->second == 1 &&
                  sym.terms().begin()->first.factors().size() == 1 &&
                  sym.terms().begin()->first.factors()[0].second == 1 &&
                  sym.terms().begin()->first.factors()[0].first.kind == CoeffGen::Kind::aug;
    if (!single) throw ValidationError("assignment key '" + k + "' is not an A-symbol");
    if (!v.is_string() && !v.is_number_integer())
      throw ValidationError("assignment value for '" + k + "' must be a coefficient string");
    a[sym.terms().begin()->first.factors()[0].first.sym.name()] =
        v.is_string() ? parse_coeff(v.get<std::string>()) : Coeff(v.get<long long>());
  }
  return a;
}

}  // namespace sfb
