#pragma once

// JSON forms. Coefficients are always exact strings ("p/q", "p", or the
// residue in characteristic p).
//
//   element     {"n": 2, "char": 0, "terms": [["-1/2", ["E(2,1)", "Y(1)"]], ...]}
//   polynomial  {"vars": ["e(1,1)", ...], "terms": [["3", [1, 0, ...]], ...]}
//   table       {"n": 2, "char": 0, "b": [...], "ctable": [{"i": 1, "j": 1, "terms": [...]}, ...]}
//   params      {"n": 2, "char": 0, "b": ["0", "1"]}

#include <json.hpp>

#include "icherednik/center.hpp"
#include "icherednik/deform.hpp"
#include "icherednik/rep.hpp"

namespace icherednik {

using json = nlohmann::json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json terms_to_json(const NCElement& a, const GlAlphabet& al);
json to_json(const NCElement& a, const HcAlgebra& alg);

/// Parses an element of alg. Words must be normal unless `renormalize` is set,
/// in which case each word is brought to normal form.
NCElement element_from_json(const json& j, const HcAlgebra& alg, bool renormalize = false);
/// The "terms" array alone.
NCElement terms_from_json(const json& terms, const HcAlgebra& alg, bool renormalize = false);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, VarSpace space, Field field);

json scalars_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const json& j, Field field);

DeformationParams params_from_json(const json& j);
json to_json(const DeformationParams& p);

json ctable_to_json(const HcAlgebra& alg);
/// Missing entries are zero. Entries must only use E letters.
AlgebraSpec spec_from_ctable_json(const json& j);

json central_set_to_json(const CentralSet& cs, const HcAlgebra& alg);
CentralSet central_set_from_json(const json& j, const HcAlgebra& alg);

json blocks_to_json(const std::vector<Block>& blocks);

}  // namespace icherednik
