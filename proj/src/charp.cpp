#include "icherednik/charp.hpp"

#include <algorithm>
#include <array>

#include "icherednik/linalg.hpp"

namespace icherednik {

namespace {

bool all_central(const NCElement& z, const RewriteAlgebra& eng) { return eng.is_central(z); }

bool commute_pairwise(const std::vector<CentralityEntry>& entries, const RewriteAlgebra& eng) {
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b)
      if (!eng.commutator(entries[a].element, entries[b].element).is_zero()) return false;
  return true;
}

}  // namespace

bool PCenterReport::passed() const {
  return pairwise_commuting && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.central; });
}

PCenterReport p_center_check(const HcAlgebra& alg) {
  const Field f = alg.field();
  const int n = alg.rank();
  if (f.p == 0) throw PreconditionError("p_center_check needs positive characteristic");
  if (f.p <= static_cast<std::uint32_t>(n)) throw PreconditionError("p_center_check needs p > n");
  if (f.p <= static_cast<std::uint32_t>(alg.spec().deformation_degree() + 1))
    throw PreconditionError("p_center_check needs p > deg(table) + 1");

  const RewriteAlgebra& eng = alg.engine();
  const unsigned p = f.p;
  PCenterReport rep;
  rep.p = f.p;
  auto add = [&](std::string name, NCElement z) {
    const bool central = all_central(z, eng);
    rep.entries.push_back({std::move(name), std::move(z), central});
  };
  for (int i = 1; i <= n; ++i) add("Y(" + std::to_string(i) + ")^p", alg.power(alg.y(i), p));
  for (int i = 1; i <= n; ++i) add("X(" + std::to_string(i) + ")^p", alg.power(alg.x(i), p));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string tok = alg.alphabet().at(alg.alphabet().e(i, j)).token();
      if (i == j) add(tok + "^p-" + tok, alg.power(alg.e(i, i), p) - alg.e(i, i));
      else add(tok + "^p", alg.power(alg.e(i, j), p));
    }
  rep.pairwise_commuting = commute_pairwise(rep.entries, eng);
  return rep;
}

bool frobenius_identity_check(const NCElement& a, const std::vector<NCElement>& samples, const RewriteAlgebra& eng) {
  const std::uint32_t p = eng.field().p;
  if (p == 0) throw PreconditionError("frobenius_identity_check needs positive characteristic");
  const NCElement ap = eng.power(a, p);
  for (const auto& w : samples) {
    NCElement iter = w;
    for (std::uint32_t s = 0; s < p; ++s) iter = eng.commutator(a, iter);
    if (!(iter == eng.commutator(ap, w))) return false;
  }
  return true;
}

Gl1Spec::Gl1Spec(std::uint32_t p, std::vector<Scalar> coeffs) : field(p), c(std::move(coeffs)) {
  if (p == 0) throw PreconditionError("the rank one algebra is only set up in characteristic p");
  for (const auto& s : c)
    if (!(s.field() == field)) throw DomainMismatch("c(h) coefficient has the wrong characteristic");
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (degree() >= static_cast<int>(p) - 1) throw PreconditionError("needs deg c < p - 1");
}

namespace {

std::vector<Scalar> to_field(std::uint32_t p, const std::vector<long>& cs) {
  const Field f(p);
  std::vector<Scalar> out;
  for (long v : cs) out.push_back(f.make(v));
  return out;
}

}  // namespace

Gl1Spec::Gl1Spec(std::uint32_t p, const std::vector<long>& coeffs) : Gl1Spec(p, to_field(p, coeffs)) {}

int Gl1Spec::degree() const { return static_cast<int>(c.size()) - 1; }

Gl1Algebra::Gl1Algebra(Gl1Spec spec) : spec_(std::move(spec)) {
  const Field f = spec_.field;
  const auto& c = spec_.c;
  auto bracket = [&](Letter a, Letter b) -> NCElement {
    NCElement out(f);
    if (a == H && b == E) out.add_term({E}, f.one());  // [h, e] = e
    if (a == F && b == H) out.add_term({F}, f.one());  // [f, h] = f
    if (a == F && b == E)                                // [f, e] = -c(h)
      for (std::size_t k = 0; k < c.size(); ++k) out.add_term(Word(k, H), -c[k]);
    return out;
  };
  engine_ = std::make_unique<RewriteAlgebra>(f, std::vector<std::string>{"e", "h", "f"}, bracket);
}

NCElement Gl1Algebra::poly_in_h(const std::vector<Scalar>& coeffs) const {
  NCElement out(field());
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term(Word(k, H), coeffs[k]);
  return out;
}

NCElement Gl1Algebra::monomial(int a, int b, int c) const {
  Word w(a, E);
  w.insert(w.end(), b, H);
  w.insert(w.end(), c, F);
  return NCElement::monomial(std::move(w), field().one());
}

Gl1Algebra gl1_build(const Gl1Spec& g) { return Gl1Algebra(g); }

std::vector<Scalar> casimir_z(const Gl1Spec& g) {
  const Field f = g.field;
  const int d = g.degree();
  if (d < 0) return {};
  // unknowns z_1..z_{d+1}; (h+1)^k - h^k = sum_{r<k} binom(k, r) h^r
  const int k_max = d + 1;
  std::vector<SparseRow> rows(k_max);
  std::vector<Scalar> rhs(k_max, f.zero());
  for (int k = 1; k <= k_max; ++k) {
    Scalar binom = f.one();
    for (int r = 0; r < k; ++r) {
      if (!binom.is_zero()) rows[r].push_back({k - 1, binom});
      binom = binom * f.make(k - r) / f.make(r + 1);
    }
  }
  for (int r = 0; r <= d; ++r) rhs[r] = g.c[r];
  auto sol = solve_linear(rows, rhs, k_max, f);
  if (!sol) throw std::logic_error("discrete antiderivative has no solution");
  std::vector<Scalar> z{f.zero()};
  z.insert(z.end(), sol->begin(), sol->end());
  return z;
}

NCElement gl1_casimir(const Gl1Algebra& alg) {
  NCElement out = alg.monomial(1, 0, 1);
  out += alg.poly_in_h(casimir_z(alg.spec()));
  return out;
}

PCenterReport gl1_p_center_check(const Gl1Algebra& alg) {
  const RewriteAlgebra& eng = alg.engine();
  const unsigned p = alg.spec().p();
  PCenterReport rep;
  rep.p = p;
  auto add = [&](std::string name, NCElement z) {
    const bool central = all_central(z, eng);
    rep.entries.push_back({std::move(name), std::move(z), central});
  };
  add("e^p", eng.power(alg.e(), p));
  add("f^p", eng.power(alg.f(), p));
  add("h^p-h", eng.power(alg.h(), p) - alg.h());
  add("casimir", gl1_casimir(alg));
  rep.pairwise_commuting = commute_pairwise(rep.entries, eng);
  return rep;
}

Z0RankReport z0_rank_report(const Gl1Algebra& alg, int bound) {
  if (bound < 1) throw std::invalid_argument("z0 window bound must be >= 1");
  const RewriteAlgebra& eng = alg.engine();
  const Field f = alg.field();
  const int p = static_cast<int>(alg.spec().p());
  const int W = p * bound;
  auto column = [&](const Word& w) -> int {
    std::array<int, 3> e{0, 0, 0};
    for (Letter l : w) ++e[l];
    if (e[0] >= W || e[1] >= W || e[2] >= W) return -1;
    return (e[0] * W + e[1]) * W + e[2];
  };

  const std::array<NCElement, 3> gens{eng.power(alg.e(), p), eng.power(alg.h(), p) - alg.h(), eng.power(alg.f(), p)};
  RowEchelon ech(f);
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < W; ++b)
      for (int c = 0; c < W; ++c) {
        // only products whose support can stay in the window
        const std::array<bool, 3> fits{a + p < W, b + p < W, c + p < W};
        const NCElement mu = alg.monomial(a, b, c);
        for (int g = 0; g < 3; ++g) {
          if (!fits[g]) continue;
          const NCElement r = eng.multiply(gens[g], mu);
          SparseRow row;
          bool inside = true;
          for (const auto& [w, coef] : r.terms()) {
            const int col = column(w);
            if (col < 0) {
              inside = false;
              break;
            }
            row.push_back({col, coef});
          }
          if (!inside) continue;
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          ech.insert(std::move(row));
        }
      }

  Z0RankReport rep;
  rep.p = static_cast<std::uint32_t>(p);
  rep.window = W;
  rep.relation_rank = ech.rank();
  rep.quotient_dimension = W * W * W - ech.rank();
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        if (ech.insert({{(a * W + b) * W + c, f.one()}})) ++rep.independent_small;
  return rep;
}

int z0_rank_check(const Gl1Algebra& alg, int bound) { return z0_rank_report(alg, bound).independent_small; }

}  // namespace icherednik
