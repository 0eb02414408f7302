#include <doctest.h>

#include "icherednik/center.hpp"
#include "icherednik/linalg.hpp"
#include "test_util.hpp"

using namespace icherednik;
using testutil::from_b;

TEST_CASE("undeformed algebras need no correction") {
  for (int n = 1; n <= 2; ++n) {
    const HcAlgebra u{AlgebraSpec::undeformed(n)};
    const CentralSet cs = central_generators(u);
    for (int i = 1; i <= n; ++i) {
      CHECK(cs.c[i - 1].is_zero());
      CHECK(cs.eta[i - 1] == t_element(i, u));
      CHECK(verify_central(t_element(i, u), u).all_zero());
    }
  }
}

TEST_CASE("rank one, linear deformation") {
  const HcAlgebra alg = from_b(1, {0, 1});
  const NCElement e = alg.e(1, 1);
  const NCElement expected = alg.multiply(alg.y(1), alg.x(1)) + alg.multiply(e, e) - e;

  // direct commutation: the closed form is central
  CHECK(alg.commutator(expected, alg.x(1)).is_zero());
  CHECK(alg.commutator(expected, alg.y(1)).is_zero());
  CHECK(verify_central(expected, alg).all_zero());

  // linear solve
  const auto c = solve_correction(1, alg, 2);
  REQUIRE(c.has_value());
  CHECK(*c == -alg.multiply(e, e) + e);
  const CentralSet cs = central_generators(alg);
  CHECK(cs.eta[0] == expected);
  CHECK(cs.degree_bounds[0] == 2);

  CHECK_FALSE(solve_correction(1, alg, 1).has_value());
}

TEST_CASE("rank one, constant deformation") {
  for (long beta : {1L, -3L, 7L}) {
    const HcAlgebra alg = from_b(1, {beta});
    const CentralSet cs = central_generators(alg);
    CHECK(cs.c[0] == -alg.e(1, 1) * Field{}.make(beta));
    CHECK(cs.eta[0] == alg.multiply(alg.y(1), alg.x(1)) + alg.e(1, 1) * Field{}.make(beta));
  }
}

TEST_CASE("centrality of easy elements") {
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  CHECK(verify_central(u.one(), u).all_zero());
  const auto s = verify_central(beta(2, u), u);
  const GlAlphabet& al = u.alphabet();
  for (Letter l = 0; l < al.size(); ++l) {
    if (al.at(l).kind == GenKind::E) CHECK(s.commutators[l].is_zero());
  }
  CHECK_FALSE(s.commutators[al.y(1)].is_zero());
  CHECK_FALSE(s.all_zero());
}

TEST_CASE("ansatz for the correction") {
  const HcAlgebra alg = from_b(2, {0, 1});
  const auto a = center_ansatz(alg, 2);
  CHECK(a.exponents.size() == 3);
  CHECK(a.elements[0] == beta(1, alg));
  CHECK(center_ansatz(alg, 2, true).elements.size() == 4);
  for (const auto& z : a.elements)
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l) CHECK(alg.commutator(alg.e(k, l), z).is_zero());
}

TEST_CASE("rank two with a linear deformation") {
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  REQUIRE(cs.eta.size() == 2);
  for (int i = 1; i <= 2; ++i) {
    const NCElement& eta = cs.eta[i - 1];
    const auto summary = verify_central(eta, alg);
    CHECK(summary.commutators.size() == 8);
    CHECK(summary.all_zero());
    CHECK(filtration_degree(eta - t_element(i, alg), alg) == 0);
    CHECK(anti_involution(eta, alg) == eta);
    CHECK(cs.c[i - 1].max_length() == i + 1);
    CHECK(uniqueness_relation_check(i, alg, cs));
    const auto top = top_symbol_crosscheck(i, alg, cs);
    CHECK_FALSE(top.skipped);
    CHECK(top.matches);
  }
  CHECK(alg.commutator(cs.eta[0], cs.eta[1]).is_zero());
}

TEST_CASE("top symbol convention across small parameters") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& b : std::vector<std::vector<long>>{{0, 1}, {1, 1}, {0, 0, 1}, {2, -1, 3}}) {
      const HcAlgebra alg = from_b(n, b);
      const CentralSet cs = central_generators(alg);
      const int m = alg.spec().deformation_degree();
      for (int i = 1; i <= n; ++i) {
        CHECK(top_symbol_crosscheck(i, alg, cs).matches);
        CHECK(cs.c[i - 1].max_length() == i + m);
      }
    }
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  CHECK(top_symbol_crosscheck(1, u, central_generators(u)).skipped);
}

TEST_CASE("top symbols of the central generators are independent") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 2; ++n) {
    const HcAlgebra alg = from_b(n, {0, 1});
    const CentralSet cs = central_generators(alg);
    const VarSpace ls = VarSpace::lstar(n);
    std::vector<Scalar> point;
    for (int v = 0; v < ls.count; ++v) point.push_back(testutil::random_scalar(rng, Field{}) + Field{}.make(v));
    std::vector<SparseRow> rows;
    for (const auto& eta : cs.eta) {
      const Polynomial s = top_symbol(eta, alg);
      SparseRow row;
      for (int v = 0; v < ls.count; ++v) {
        const Scalar d = s.derivative(v).evaluate(point);
        if (!d.is_zero()) row.emplace_back(v, d);
      }
      rows.push_back(row);
    }
    CHECK(matrix_rank(rows, Field{}) == n);
  }
}

TEST_CASE("symmetrized f_k against t_{k+1}") {
  const Field f;
  const auto r1 = rais_elements_check(1, 0);
  CHECK(r1.exact());
  CHECK(r1.up_to_lower());

  const auto r2 = rais_elements_check(2, 1);
  CHECK(r2.offset() == 1);
  CHECK(r2.up_to_lower());
  CHECK_FALSE(r2.exact());
  CHECK(r2.entries[0].exact_index == 1);
  CHECK(r2.entries[1].symbol_sign == f.make(-1));
  CHECK(*r2.entries[1].lower == std::vector<Scalar>{f.make(1, 2)});

  const auto r3 = rais_elements_check(3, 2);
  CHECK(r3.offset() == 1);
  CHECK(r3.up_to_lower());
  CHECK(r3.entries[1].symbol_sign == f.make(-1));
  CHECK(*r3.entries[1].lower == std::vector<Scalar>{f.one()});
  CHECK(r3.entries[2].symbol_sign == f.one());
  CHECK(*r3.entries[2].lower == (std::vector<Scalar>{f.make(1, 3), f.make(-1, 2)}));
}
