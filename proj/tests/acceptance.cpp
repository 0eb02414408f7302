#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "icherednik/charp.hpp"
#include "icherednik/json_io.hpp"
#include "icherednik/polyring.hpp"
#include "icherednik/rep.hpp"

using namespace icherednik;

namespace {

HcAlgebra from_b(int n, const std::vector<long>& b, Field f = {}) {
  DeformationParams p{n, f, {}};
  for (long x : b) p.b.push_back(f.make(x));
  return HcAlgebra(pairing_from_params(p));
}

const std::vector<std::vector<long>> kParams{{1}, {0, 1}, {1, 1}, {0, 0, 1}};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

Outcome pbw_grid() {
  Outcome o;
  for (int n = 1; n <= 2; ++n)
    for (const auto& b : kParams) {
      const auto r = check_pbw_consistency(from_b(n, b), 4);
      std::ostringstream what;
      what << "n=" << n << " b=" << b.size() << " coefficients, " << r.overlaps.size() << " overlaps, "
           << r.associativity.size() << " words";
      o.require(r.consistent(), what.str());
    }
  std::ifstream in(DATA_DIR "/invalid_ctable.json");
  const HcAlgebra bad(spec_from_ctable_json(json::parse(in)));
  const auto r = check_pbw_consistency(bad, 4);
  o.require(!r.consistent(), "invalid table passed");
  o.notes.push_back("invalid table: " + std::to_string(r.overlaps.size()) + " failing overlaps");
  return o;
}

Outcome center_rank_two() {
  Outcome o;
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  for (int i = 1; i <= 2; ++i) {
    const NCElement& eta = cs.eta[i - 1];
    const std::string tag = "eta_" + std::to_string(i);
    const auto s = verify_central(eta, alg);
    o.require(s.commutators.size() == 8 && s.all_zero(), tag + " central");
    o.require(filtration_degree(eta - t_element(i, alg), alg) == 0, tag + " - t has filtration degree 0");
    o.require(anti_involution(eta, alg) == eta, tag + " fixed by the anti-involution");
  }
  o.require(alg.commutator(cs.eta[0], cs.eta[1]).is_zero(), "eta_1, eta_2 commute");

  const HcAlgebra a1 = from_b(1, {0, 1});
  const NCElement e = a1.e(1, 1);
  const NCElement closed = a1.multiply(a1.y(1), a1.x(1)) + a1.multiply(e, e) - e;
  const auto c = solve_correction(1, a1, 2);
  o.require(c && t_element(1, a1) - *c == closed, "n=1 closed form by linear solve");
  o.require(a1.commutator(closed, a1.x(1)).is_zero() && a1.commutator(closed, a1.y(1)).is_zero() &&
                a1.commutator(closed, e).is_zero(),
            "n=1 closed form by direct commutation");
  return o;
}

Outcome symmetrized_f_k() {
  Outcome o;
  const Field f;
  for (int n = 1; n <= 3; ++n) {
    const RaisReport r = rais_elements_check(n, n - 1);
    for (const auto& e : r.entries) {
      std::ostringstream line;
      line << "n=" << n << " k=" << e.k << ": ";
      const bool exact = e.exact_index == e.k + 1;
      if (exact) {
        line << "sym(f_k) = " << e.exact_sign << " t_" << e.k + 1;
      } else if (e.symbol_index && e.lower) {
        line << "sym(f_k) = " << e.symbol_sign << " t_" << *e.symbol_index;
        for (std::size_t j = 0; j < e.lower->size(); ++j)
          if (!(*e.lower)[j].is_zero()) line << " + (" << (*e.lower)[j] << ") t_" << j + 1;
        line << "; equal only modulo lower t_j";
      } else {
        line << "no match";
      }
      o.notes.push_back(line.str());
      o.require(exact, "exact equality n=" + std::to_string(n) + " k=" + std::to_string(e.k));
    }
    std::ostringstream summary;
    summary << "n=" << n << ": symbol offset " << (r.offset() ? std::to_string(*r.offset()) : "none")
            << ", equal modulo lower t_j: " << (r.up_to_lower() ? "yes" : "no");
    o.notes.push_back(summary.str());
    for (int k = 1; k <= n; ++k)
      o.require(hessian_identity_check(n, k, f).all_vanish(), "Hessian n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return o;
}

Outcome uniqueness() {
  Outcome o;
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  for (int i = 1; i <= 2; ++i) o.require(uniqueness_relation_check(i, alg, cs), "i=" + std::to_string(i));
  return o;
}

Outcome generating_function() {
  Outcome o;
  const Field f;
  const VarSpace s = VarSpace::eigen(1);
  const Polynomial l = Polynomial::variable(s, f, 0);
  const Polynomial minus_one = Polynomial::constant(s, f.make(-1));
  const BivarSeries g = gf_coeffs(1, 1);
  o.require(g.coeff(0, 0) == l && g.coeff(0, 1) == minus_one, "n=1 row tau^0");
  o.require(g.coeff(1, 0) == l * l && g.coeff(1, 1).is_zero() && g.coeff(1, 2) == minus_one, "n=1 row tau^1");
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      o.require(lambda_identity_check(n, m, f), "lambda identity n=" + std::to_string(n) + " m=" + std::to_string(m));
  for (int n = 1; n <= 2; ++n)
    for (const auto& b : std::vector<std::vector<long>>{{0, 1}, {1, 1}, {0, 0, 1}, {1, 0, 1}}) {
      const HcAlgebra alg = from_b(n, b);
      const CentralSet cs = central_generators(alg);
      for (int i = 1; i <= n; ++i) {
        const auto r = top_symbol_crosscheck(i, alg, cs);
        o.require(!r.skipped && r.matches, "top symbol n=" + std::to_string(n) + " m=" +
                                               std::to_string(b.size() - 1) + " i=" + std::to_string(i));
      }
    }
  return o;
}

Outcome representations() {
  Outcome o;
  const Field f;
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  const HcAlgebra alg = from_b(2, {0, 1});
  const CentralSet cs = central_generators(alg);
  for (int t = 0; t < 5; ++t) {
    Weight l{f.make(num(rng), den(rng)), f.make(num(rng), den(rng))};
    const VermaModule m(alg, l, 4);
    for (int i = 0; i < 2; ++i) {
      const auto s = m.act(cs.eta[i], m.highest()).scalar_multiple();
      o.require(s && *s == -hc_evaluate(cs.c[i], l, alg), "weight " + l[0].to_string() + "," + l[1].to_string());
    }
  }
  const HcAlgebra a1 = from_b(1, {3});
  const CentralSet c1 = central_generators(a1);
  std::vector<Weight> sample;
  for (long x = -4; x <= 5; ++x) sample.push_back({f.make(x, 2)});
  for (const auto& a : sample)
    for (const auto& b : sample) o.require(same_block(a, b, a1, c1) == (a == b), "injectivity at " + a[0].to_string());
  return o;
}

Outcome characteristic_p() {
  Outcome o;
  o.require(p_center_check(from_b(1, {0, 1}, Field(5))).passed(), "p-center n=1 p=5 b=(0,1)");
  o.require(p_center_check(HcAlgebra(AlgebraSpec::undeformed(2, Field(3)))).passed(), "p-center n=2 p=3 undeformed");
  for (std::uint32_t p : {3u, 5u})
    for (const auto& c : std::vector<std::vector<long>>{{1}, {0, 2}, {1, 2}}) {
      const Gl1Algebra g = gl1_build(Gl1Spec(p, c));
      const std::string tag = "p=" + std::to_string(p) + " deg c=" + std::to_string(c.size() - 1);
      o.require(gl1_p_center_check(g).passed(), "rank one p-center " + tag);
      o.require(g.engine().is_central(gl1_casimir(g)), "Casimir " + tag);
      o.require(z0_rank_check(g) == static_cast<int>(p * p * p), "rank " + tag);
    }
  return o;
}

Outcome serialization() {
  Outcome o;
  std::mt19937 rng(8);
  const HcAlgebra a = from_b(2, {0, 1});
  const HcAlgebra b = from_b(2, {1, 1}, Field(5));
  std::uniform_int_distribution<int> len(0, 4), num(-20, 20), den(1, 9);
  for (int t = 0; t < 100; ++t) {
    const HcAlgebra& alg = t % 2 ? b : a;
    std::uniform_int_distribution<int> let(0, alg.alphabet().size() - 1);
    NCElement x(alg.field());
    for (int k = 0; k < 1 + t % 6; ++k) {
      Word w(len(rng));
      for (auto& l : w) l = static_cast<Letter>(let(rng));
      std::sort(w.begin(), w.end());
      x.add_term(w, alg.field().is_rational() ? alg.field().make(num(rng), den(rng)) : alg.field().make(num(rng)));
    }
    const std::string text = to_json(x, alg).dump();
    const NCElement y = element_from_json(json::parse(text), alg);
    o.require(y == x && to_json(y, alg).dump() == text, "element " + std::to_string(t));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"PBW consistency on the parameter grid, invalid table rejected", pbw_grid},
      {"central generators for n=2 b=(0,1), closed form for n=1", center_rank_two},
      {"sym(f_k) = t_{k+1} exactly for n <= 3, Hessian identity", symmetrized_f_k},
      {"uniqueness relation for n=2 b=(0,1)", uniqueness},
      {"generating function rows, lambda identity, top symbols", generating_function},
      {"Verma scalars and block injectivity", representations},
      {"characteristic p centers, Casimir, quotient rank", characteristic_p},
      {"JSON round trip of 100 random elements", serialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << "  " << criteria[i].first << "  (" << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
