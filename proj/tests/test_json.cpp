#include <doctest.h>

#include "icherednik/json_io.hpp"
#include "test_util.hpp"

using namespace icherednik;
using testutil::from_b;

TEST_CASE("random elements round trip through JSON text") {
  std::mt19937 rng(100);
  const HcAlgebra a = from_b(2, {0, 1});
  const HcAlgebra b = from_b(1, {1, 2}, Field(7));
  for (int t = 0; t < 100; ++t) {
    const HcAlgebra& alg = t % 4 == 3 ? b : a;
    const NCElement x = testutil::random_element(rng, alg, 4, 1 + t % 5);
    const std::string text = to_json(x, alg).dump();
    const NCElement y = element_from_json(json::parse(text), alg);
    CHECK(y == x);
    CHECK(to_json(y, alg).dump() == text);
  }
}

TEST_CASE("element format") {
  const HcAlgebra alg = from_b(2, {1});
  const NCElement x = alg.multiply(alg.e(2, 1), alg.y(1)) * Field{}.make(-1, 2) + alg.constant(3);
  const json j = to_json(x, alg);
  CHECK(j["n"] == 2);
  CHECK(j["char"] == 0);
  CHECK(j["terms"] == json::parse(R"j([["3", []], ["-1/2", ["E(2,1)", "Y(1)"]]])j"));
}

TEST_CASE("non-normal words are rejected unless renormalizing") {
  const HcAlgebra alg = from_b(1, {1});
  const json j = json::parse(R"j({"n": 1, "char": 0, "terms": [["1", ["X(1)", "Y(1)"]]]})j");
  CHECK_THROWS_AS(element_from_json(j, alg), JsonFormatError);
  CHECK(element_from_json(j, alg, true) == alg.multiply(alg.x(1), alg.y(1)));
  CHECK_THROWS(element_from_json(json::parse(R"j({"n": 2, "char": 0, "terms": []})j"), alg));
  CHECK_THROWS(element_from_json(json::parse(R"j({"n": 1, "char": 0, "terms": [[0.5, []]]})j"), alg));
  CHECK_THROWS(element_from_json(json::parse(R"j({"n": 1, "char": 0, "terms": [["1", ["Q(1)"]]]})j"), alg));
}

TEST_CASE("tables, parameters and polynomials round trip") {
  for (const auto& alg : {from_b(2, {0, 1}), from_b(1, {2, 0, 1}, Field(5))}) {
    const AlgebraSpec s = spec_from_ctable_json(json::parse(ctable_to_json(alg).dump()));
    CHECK(s.ctable == alg.spec().ctable);
    CHECK(s.n == alg.rank());
    CHECK(s.field == alg.field());
  }
  const DeformationParams p = params_from_json(json::parse(R"j({"n": 2, "char": 0, "b": ["0", "1/3"]})j"));
  CHECK(p.b == std::vector<Scalar>{Field{}.zero(), Field{}.make(1, 3)});
  CHECK(to_json(p) == json::parse(R"j({"n": 2, "char": 0, "b": ["0", "1/3"]})j"));

  const VarSpace s = VarSpace::matrix(2);
  const Polynomial q = Polynomial::variable(s, Field{}, 0) * Polynomial::variable(s, Field{}, 3) * Field{}.make(-2, 5);
  CHECK(polynomial_from_json(json::parse(to_json(q).dump()), s, Field{}) == q);
}

TEST_CASE("central sets round trip") {
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  const CentralSet back = central_set_from_json(json::parse(central_set_to_json(cs, alg).dump()), alg);
  CHECK(back.eta == cs.eta);
  CHECK(back.c == cs.c);
}
