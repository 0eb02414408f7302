#include <doctest.h>

#include "icherednik/charp.hpp"
#include "test_util.hpp"

using namespace icherednik;
using testutil::from_b;

TEST_CASE("p-center of H_c") {
  const auto r = p_center_check(from_b(1, {0, 1}, Field(5)));
  CHECK(r.passed());
  CHECK(r.pairwise_commuting);
  CHECK(r.entries.size() == 3);
  const auto u = p_center_check(HcAlgebra(AlgebraSpec::undeformed(2, Field(3))));
  CHECK(u.passed());
  CHECK(u.entries.size() == 8);
  CHECK(p_center_check(from_b(2, {1}, Field(5))).passed());
}

TEST_CASE("p-center preconditions") {
  CHECK_THROWS_AS(p_center_check(from_b(1, {1})), PreconditionError);
  CHECK_THROWS_AS(p_center_check(HcAlgebra(AlgebraSpec::undeformed(3, Field(3)))), PreconditionError);
}

TEST_CASE("without the restricted correction E(1,1)^p is not central") {
  const HcAlgebra alg = from_b(1, {0, 1}, Field(5));
  const NCElement ep = alg.power(alg.e(1, 1), 5);
  CHECK_FALSE(alg.engine().is_central(ep));
  CHECK(alg.engine().is_central(ep - alg.e(1, 1)));
}

TEST_CASE("Frobenius identity for ad") {
  const HcAlgebra alg = from_b(2, {0, 1}, Field(3));
  std::vector<NCElement> samples;
  for (Letter l = 0; l < alg.alphabet().size(); ++l) samples.push_back(alg.generator(l));
  samples.push_back(alg.multiply(alg.y(1), alg.e(2, 1)));
  for (Letter l = 0; l < alg.alphabet().size(); ++l)
    CHECK(frobenius_identity_check(alg.generator(l), samples, alg.engine()));
  CHECK(frobenius_identity_check(alg.e(1, 2) + alg.y(1), samples, alg.engine()));
}

TEST_CASE("rank one algebra relations") {
  const Gl1Algebra g = gl1_build(Gl1Spec(5, std::vector<long>{1, 2}));
  const RewriteAlgebra& eng = g.engine();
  const Field f(5);
  CHECK(eng.commutator(g.h(), g.e()) == g.e());
  CHECK(eng.commutator(g.h(), g.f()) == -g.f());
  CHECK(eng.commutator(g.e(), g.f()) == g.poly_in_h({f.one(), f.make(2)}));
  CHECK(g.monomial(1, 1, 1) == eng.multiply(eng.multiply(g.e(), g.h()), g.f()));
  CHECK_THROWS(Gl1Spec(3, std::vector<long>{0, 0, 1}));
  CHECK(Gl1Spec(5, std::vector<long>{1, 0, 0}).degree() == 0);
  CHECK(Gl1Spec(5, std::vector<long>{0}).degree() == -1);
}

TEST_CASE("Casimir element") {
  const Field f(5);
  const Gl1Algebra g1 = gl1_build(Gl1Spec(5, std::vector<long>{1}));
  CHECK(casimir_z(g1.spec()) == std::vector<Scalar>{f.zero(), f.one()});
  CHECK(gl1_casimir(g1) == g1.engine().multiply(g1.e(), g1.f()) + g1.h());

  const Gl1Algebra g2 = gl1_build(Gl1Spec(5, std::vector<long>{0, 2}));
  CHECK(gl1_casimir(g2) ==
        g2.engine().multiply(g2.e(), g2.f()) + g2.engine().power(g2.h(), 2) - g2.h());

  const Gl1Algebra g0 = gl1_build(Gl1Spec(3, std::vector<long>{0}));
  CHECK(gl1_casimir(g0) == g0.engine().multiply(g0.e(), g0.f()));

  for (std::uint32_t p : {3u, 5u, 7u})
    for (const auto& c : std::vector<std::vector<long>>{{1}, {0, 2}, {1, 2}, {2, 0, 1}}) {
      if (static_cast<int>(c.size()) - 1 >= static_cast<int>(p) - 1) continue;
      const Gl1Spec s(p, c);
      const auto z = casimir_z(s);
      const Gl1Algebra g = gl1_build(s);
      const Field fp(p);
      // z(h + 1) - z(h) = c(h) at every residue
      for (std::uint32_t h = 0; h < p; ++h) {
        auto at = [&](const std::vector<Scalar>& poly, Scalar x) {
          Scalar v = fp.zero();
          for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
          return v;
        };
        CHECK(at(z, fp.make(h + 1)) - at(z, fp.make(h)) == at(s.c, fp.make(h)));
      }
      const NCElement cas = gl1_casimir(g);
      CHECK(g.engine().is_central(cas));
      const NCElement rest = cas - g.engine().multiply(g.e(), g.f());
      CHECK(rest == g.poly_in_h(z));
    }
}

TEST_CASE("rank one p-center") {
  for (std::uint32_t p : {3u, 5u})
    for (const auto& c : std::vector<std::vector<long>>{{1}, {0, 2}, {1, 2}, {0}}) {
      const auto r = gl1_p_center_check(gl1_build(Gl1Spec(p, c)));
      CHECK(r.passed());
      CHECK(r.pairwise_commuting);
      CHECK(r.entries.size() == 4);
    }
}

TEST_CASE("rank of the restricted p-center quotient") {
  CHECK(z0_rank_check(gl1_build(Gl1Spec(3, std::vector<long>{0}))) == 27);
  CHECK(z0_rank_check(gl1_build(Gl1Spec(3, std::vector<long>{1}))) == 27);
  CHECK(z0_rank_check(gl1_build(Gl1Spec(5, std::vector<long>{0, 2}))) == 125);
  const auto r = z0_rank_report(gl1_build(Gl1Spec(3, std::vector<long>{1, 2})));
  CHECK(r.window == 6);
  CHECK(r.quotient_dimension == 27);
  CHECK(r.independent_small == 27);
}
