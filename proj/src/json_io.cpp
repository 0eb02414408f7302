#include "icherednik/json_io.hpp"

namespace icherednik {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Field field_from_json(const json& j) {
  if (!j.contains("char")) return Field();
  return Field(field_of(j, "char").get<std::uint32_t>());
}

void require_algebra(const json& j, const HcAlgebra& alg) {
  if (j.contains("n") && j.at("n").get<int>() != alg.rank()) throw DomainMismatch("element has a different rank");
  if (j.contains("char") && j.at("char").get<std::uint32_t>() != alg.field().p)
    throw DomainMismatch("element has a different characteristic");
}

}  // namespace

json terms_to_json(const NCElement& a, const GlAlphabet& al) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms()) {
    json word = json::array();
    for (Letter l : w) word.push_back(al.at(l).token());
    terms.push_back(json::array({c.to_string(), std::move(word)}));
  }
  return terms;
}

json to_json(const NCElement& a, const HcAlgebra& alg) {
  return {{"n", alg.rank()}, {"char", alg.field().p}, {"terms", terms_to_json(a, alg.alphabet())}};
}

NCElement terms_from_json(const json& terms, const HcAlgebra& alg, bool renormalize) {
  if (!terms.is_array()) throw JsonFormatError("'terms' must be an array");
  const Field f = alg.field();
  NCElement out(f);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
      throw JsonFormatError("each term must be [coefficient, [tokens...]]");
    const Scalar c = f.parse(t[0].get<std::string>());
    Word w;
    for (const auto& tok : t[1]) {
      if (!tok.is_string()) throw JsonFormatError("generator tokens must be strings");
      w.push_back(alg.alphabet().parse(tok.get<std::string>()));
    }
    if (is_nondecreasing(w)) out.add_term(w, c);
    else if (renormalize) out.add_scaled(alg.normal_form(w), c);
    else throw JsonFormatError("word is not in normal order");
  }
  return out;
}

NCElement element_from_json(const json& j, const HcAlgebra& alg, bool renormalize) {
  require_algebra(j, alg);
  return terms_from_json(field_of(j, "terms"), alg, renormalize);
}

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({c.to_string(), e}));
  return {{"vars", p.space().var_names()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j, VarSpace space, Field field) {
  if (field_of(j, "vars").get<std::vector<std::string>>() != space.var_names())
    throw JsonFormatError("polynomial variables do not match the expected space");
  Polynomial out(space, field);
  for (const auto& t : field_of(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw JsonFormatError("each term must be [coefficient, [exponents...]]");
    Exponents e = t[1].get<Exponents>();
    if (static_cast<int>(e.size()) != space.count) throw JsonFormatError("exponent vector has the wrong length");
    out.add_term(e, field.parse(t[0].get<std::string>()));
  }
  return out;
}

json scalars_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::vector<Scalar> scalars_from_json(const json& j, Field field) {
  if (!j.is_array()) throw JsonFormatError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& s : j) {
    if (s.is_string()) out.push_back(field.parse(s.get<std::string>()));
    else if (s.is_number_integer()) out.push_back(field.make(s.get<long>()));
    else throw JsonFormatError("scalars must be strings or integers");
  }
  return out;
}

DeformationParams params_from_json(const json& j) {
  DeformationParams p;
  p.n = field_of(j, "n").get<int>();
  p.field = field_from_json(j);
  p.b = scalars_from_json(field_of(j, "b"), p.field);
  return p;
}

json to_json(const DeformationParams& p) { return {{"n", p.n}, {"char", p.field.p}, {"b", scalars_to_json(p.b)}}; }

json ctable_to_json(const HcAlgebra& alg) {
  const int n = alg.rank();
  json entries = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      entries.push_back({{"i", i}, {"j", j}, {"terms", terms_to_json(alg.spec().c(i, j), alg.alphabet())}});
  return {{"n", n}, {"char", alg.field().p}, {"b", scalars_to_json(alg.spec().params)}, {"ctable", std::move(entries)}};
}

AlgebraSpec spec_from_ctable_json(const json& j) {
  const int n = field_of(j, "n").get<int>();
  const Field f = field_from_json(j);
  // parsing needs an alphabet and normal forms in U(g), which the table does not affect
  const HcAlgebra ug(AlgebraSpec::undeformed(n, f));
  AlgebraSpec spec = AlgebraSpec::undeformed(n, f);
  for (const auto& e : field_of(j, "ctable")) {
    const int i = field_of(e, "i").get<int>();
    const int jj = field_of(e, "j").get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n) throw JsonFormatError("ctable index out of range");
    spec.c(i, jj) = terms_from_json(field_of(e, "terms"), ug, true);
  }
  if (j.contains("b")) spec.params = scalars_from_json(j.at("b"), f);
  return spec;
}

json central_set_to_json(const CentralSet& cs, const HcAlgebra& alg) {
  json eta = json::array(), c = json::array();
  for (const auto& e : cs.eta) eta.push_back(terms_to_json(e, alg.alphabet()));
  for (const auto& e : cs.c) c.push_back(terms_to_json(e, alg.alphabet()));
  return {{"n", cs.n},
          {"char", alg.field().p},
          {"b", scalars_to_json(cs.params)},
          {"degree_bounds", cs.degree_bounds},
          {"eta", std::move(eta)},
          {"c", std::move(c)}};
}

CentralSet central_set_from_json(const json& j, const HcAlgebra& alg) {
  require_algebra(j, alg);
  CentralSet cs;
  cs.n = alg.rank();
  for (const auto& t : field_of(j, "eta")) cs.eta.push_back(terms_from_json(t, alg));
  for (const auto& t : field_of(j, "c")) cs.c.push_back(terms_from_json(t, alg));
  if (j.contains("degree_bounds")) cs.degree_bounds = j.at("degree_bounds").get<std::vector<int>>();
  if (j.contains("b")) cs.params = scalars_from_json(j.at("b"), alg.field());
  if (static_cast<int>(cs.eta.size()) != cs.n || cs.c.size() != cs.eta.size())
    throw JsonFormatError("central set needs n elements eta and n corrections c");
  return cs;
}

json blocks_to_json(const std::vector<Block>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json weights = json::array();
    for (const auto& w : b.weights) weights.push_back(scalars_to_json(w));
    out.push_back({{"character", scalars_to_json(b.character)}, {"weights", std::move(weights)}});
  }
  return out;
}

}  // namespace icherednik
