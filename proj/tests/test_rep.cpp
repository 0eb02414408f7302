#include <doctest.h>

#include "icherednik/rep.hpp"
#include "test_util.hpp"

using namespace icherednik;
using testutil::from_b;

namespace {

Weight weight(std::initializer_list<long> xs, Field f = {}) {
  Weight w;
  for (long x : xs) w.push_back(f.make(x));
  return w;
}

Weight random_weight(std::mt19937& rng, int n) {
  Weight w;
  for (int i = 0; i < n; ++i) w.push_back(testutil::random_scalar(rng, Field{}));
  return w;
}

}  // namespace

TEST_CASE("Harish-Chandra evaluation") {
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  const Field f;
  const Weight l = {f.make(3), f.make(-1, 2)};
  CHECK(hc_evaluate(beta(1, u), l, u) == f.make(5, 2));
  // beta_2 = E11 E22 - E21 E12 - (E11 - E22)/2 in normal form
  const NCElement b2 = beta(2, u);
  const Scalar direct = l[0] * l[1] - (l[0] - l[1]) * f.make(1, 2);
  CHECK(hc_evaluate(b2, l, u) == direct);
  CHECK(hc_evaluate_shifted(beta(1, u), l, u) == f.make(5, 2));
  CHECK(rho(2) == Weight{f.make(1, 2), f.make(-1, 2)});
  CHECK_THROWS_AS(hc_evaluate(u.e(1, 2), l, u), NotWeightZero);
  CHECK_THROWS_AS(hc_evaluate(u.y(1), l, u), NotWeightZero);
}

TEST_CASE("Harish-Chandra evaluation is multiplicative on the center of Ug") {
  std::mt19937 rng(9);
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  const std::vector<NCElement> z{beta(1, u), beta(2, u), u.multiply(beta(1, u), beta(2, u)) + u.constant(2)};
  for (int t = 0; t < 5; ++t) {
    const Weight l = random_weight(rng, 2);
    for (const auto& a : z)
      for (const auto& b : z) CHECK(hc_evaluate(u.multiply(a, b), l, u) == hc_evaluate(a, l, u) * hc_evaluate(b, l, u));
  }
}

TEST_CASE("Verma module is a module") {
  std::mt19937 rng(21);
  const HcAlgebra alg = from_b(2, {0, 1});
  const VermaModule m(alg, weight({2, -1}), 8);
  const GlAlphabet& al = alg.alphabet();
  const std::vector<VermaVector> vs{m.highest(), m.basis_vector({al.e(2, 1)}), m.basis_vector({al.e(2, 1), al.y(2)})};
  for (int t = 0; t < 20; ++t) {
    const NCElement a = testutil::random_element(rng, alg, 2, 2), b = testutil::random_element(rng, alg, 2, 2);
    for (const auto& v : vs) CHECK(m.act(alg.multiply(a, b), v) == m.act(a, m.act(b, v)));
  }
  CHECK(m.act(alg.e(1, 2), m.highest()).is_zero());
  CHECK(m.act(alg.x(1), m.highest()).is_zero());
  CHECK(m.act(alg.e(1, 1), m.highest()).scalar_multiple() == Field{}.make(2));
  CHECK_THROWS_AS(m.basis_vector({al.x(1)}), std::invalid_argument);
  const VermaModule shallow(alg, weight({0, 0}), 1);
  CHECK_THROWS_AS(shallow.act(alg.multiply(alg.y(1), alg.y(2)), shallow.highest()), TruncationOverflow);
}

TEST_CASE("central characters, closed forms") {
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  const CentralSet cu = central_generators(u);
  for (long a : {-2L, 0L, 5L}) {
    const auto ch = central_character(weight({a, 1 - a}), u, cu);
    CHECK(ch.values == std::vector<Scalar>(2, Field{}.zero()));
  }
  const HcAlgebra a1 = from_b(1, {0, 1});
  const CentralSet c1 = central_generators(a1);
  for (long l = -3; l <= 3; ++l) {
    const auto ch = central_character(weight({l}), a1, c1);
    CHECK(ch.values[0] == Field{}.make(l * l - l));
    CHECK(ch.consistent());
  }
  const HcAlgebra ab = from_b(1, {4});
  const CentralSet cb = central_generators(ab);
  for (long l = -3; l <= 3; ++l) CHECK(central_character(weight({l}), ab, cb).values[0] == Field{}.make(4 * l));
}

TEST_CASE("central characters match the Harish-Chandra values") {
  std::mt19937 rng(33);
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  for (int t = 0; t < 5; ++t) {
    const Weight l = random_weight(rng, 2);
    const VermaModule m(alg, l, 4);
    for (int i = 0; i < 2; ++i) {
      const auto s = m.act(cs.eta[i], m.highest()).scalar_multiple();
      REQUIRE(s.has_value());
      CHECK(*s == -hc_evaluate(cs.c[i], l, alg));
    }
    CHECK(central_character(l, alg, cs).consistent());
  }
  // eta also acts by the same scalar further down the module
  const Weight l = weight({3, -2});
  const VermaModule m(alg, l, 6);
  const auto ch = central_character(l, alg, cs);
  const VermaVector v = m.basis_vector({alg.alphabet().y(1)});
  for (int i = 0; i < 2; ++i) {
    VermaVector scaled = v;
    scaled.coeffs *= ch.values[i];
    CHECK(m.act(cs.eta[i], v) == scaled);
  }
}

TEST_CASE("blocks for a constant deformation of rank one separate weights") {
  const HcAlgebra alg = from_b(1, {2});
  const CentralSet cs = central_generators(alg);
  std::vector<Weight> sample;
  for (long l = -4; l <= 5; ++l) sample.push_back(weight({l}));
  for (const auto& a : sample)
    for (const auto& b : sample) CHECK(same_block(a, b, alg, cs) == (a == b));
  CHECK(block_partition(sample, alg, cs).size() == sample.size());
}

TEST_CASE("same_block is an equivalence relation") {
  const HcAlgebra alg = from_b(1, {0, 1});
  const CentralSet cs = central_generators(alg);
  std::vector<Weight> sample;
  for (long l = -3; l <= 4; ++l) sample.push_back(weight({l}));
  for (const auto& a : sample) {
    CHECK(same_block(a, a, alg, cs));
    for (const auto& b : sample) {
      CHECK(same_block(a, b, alg, cs) == same_block(b, a, alg, cs));
      for (const auto& c : sample)
        if (same_block(a, b, alg, cs) && same_block(b, c, alg, cs)) CHECK(same_block(a, c, alg, cs));
    }
  }
  // l^2 - l pairs l with 1 - l
  CHECK(same_block(weight({3}), weight({-2}), alg, cs));
  const auto blocks = block_partition(sample, alg, cs);
  CHECK(blocks.size() == 4);
  for (const auto& b : blocks) CHECK(b.weights.size() == 2);
}

TEST_CASE("block partition edge cases") {
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  CHECK(block_partition({weight({1, 2})}, alg, cs).size() == 1);
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  const CentralSet cu = central_generators(u);
  CHECK(block_partition({weight({1, 2}), weight({0, 0}), weight({-5, 3})}, u, cu).size() == 1);
}

TEST_CASE("finiteness probe") {
  std::mt19937 rng(41);
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  std::vector<Weight> sample;
  for (int t = 0; t < 8; ++t) sample.push_back(random_weight(rng, 2));
  sample.push_back(weight({1, 0}));
  sample.push_back(weight({0, 1}));
  const auto r = finiteness_probe(alg, cs, sample);
  CHECK_FALSE(r.skipped);
  CHECK(r.identity_witness);
  CHECK(r.passed());
  CHECK(r.max_fiber <= static_cast<std::size_t>(r.bezout_bound));
  const HcAlgebra u{AlgebraSpec::undeformed(2)};
  CHECK(finiteness_probe(u, central_generators(u), sample).skipped);
}
