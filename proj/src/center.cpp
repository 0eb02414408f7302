#include "icherednik/center.hpp"

#include <algorithm>
#include <map>

#include "icherednik/linalg.hpp"
#include "icherednik/polyring.hpp"

namespace icherednik {

NCElement beta(int i, const HcAlgebra& alg) {
  const int n = alg.rank();
  if (i < 1 || i > n) throw std::out_of_range("beta index out of range");
  return symmetrization(char_poly_coeffs(n, alg.field())[i], alg);
}

NCElement t_element(int i, const HcAlgebra& alg) {
  const NCElement b = beta(i, alg);
  NCElement out = alg.zero();
  for (int j = 1; j <= alg.rank(); ++j) out += alg.multiply(alg.commutator(b, alg.y(j)), alg.x(j));
  return out;
}

namespace {

void weighted_partitions(int n, int d, int part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (part > n) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a * part <= d; ++a) {
    cur[part - 1] = a;
    weighted_partitions(n, d - a * part, part + 1, cur, out);
  }
  cur[part - 1] = 0;
}

int weighted_degree(const std::vector<int>& e) {
  int d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) d += static_cast<int>(j + 1) * e[j];
  return d;
}

}  // namespace

CenterBasisAnsatz center_ansatz(const HcAlgebra& alg, int d, bool include_constant) {
  const int n = alg.rank();
  CenterBasisAnsatz ans;
  ans.degree_bound = d;
  std::vector<int> cur(n, 0);
  std::vector<std::vector<int>> exps;
  weighted_partitions(n, d, 1, cur, exps);
  std::stable_sort(exps.begin(), exps.end(),
                   [](const auto& a, const auto& b) { return weighted_degree(a) < weighted_degree(b); });

  std::vector<NCElement> betas;
  for (int i = 1; i <= n; ++i) betas.push_back(beta(i, alg));
  // products are cached by exponent vector so that each new monomial costs one multiplication
  std::map<std::vector<int>, NCElement> made;
  made.emplace(std::vector<int>(n, 0), alg.one());
  for (const auto& e : exps) {
    if (!made.count(e)) {
      std::vector<int> prev = e;
      int j = n - 1;
      while (prev[j] == 0) --j;
      --prev[j];
      made.emplace(e, alg.multiply(made.at(prev), betas[j]));
    }
    if (!include_constant && weighted_degree(e) == 0) continue;
    ans.exponents.push_back(e);
    ans.elements.push_back(made.at(e));
  }
  return ans;
}

std::optional<NCElement> solve_correction(int i, const HcAlgebra& alg, int d) {
  const NCElement t = t_element(i, alg);
  const NCElement y1 = alg.y(1);
  const NCElement target = alg.commutator(t, y1);
  if (target.is_zero()) return alg.zero();

  const CenterBasisAnsatz ans = center_ansatz(alg, d);
  const Field f = alg.field();
  std::map<Word, SparseRow> rows_by_word;
  for (std::size_t m = 0; m < ans.elements.size(); ++m) {
    const NCElement col = alg.commutator(ans.elements[m], y1);
    for (const auto& [w, c] : col.terms()) rows_by_word[w].push_back({static_cast<int>(m), c});
  }
  for (const auto& [w, c] : target.terms()) rows_by_word[w];

  std::vector<SparseRow> rows;
  std::vector<Scalar> rhs;
  for (auto& [w, row] : rows_by_word) {
    rows.push_back(std::move(row));
    rhs.push_back(target.coefficient(w));
  }
  auto sol = solve_linear(rows, rhs, static_cast<int>(ans.elements.size()), f);
  if (!sol) return std::nullopt;
  NCElement c(f);
  for (std::size_t m = 0; m < ans.elements.size(); ++m)
    if (!(*sol)[m].is_zero()) c.add_scaled(ans.elements[m], (*sol)[m]);
  return c;
}

bool CentralitySummary::all_zero() const {
  return std::all_of(commutators.begin(), commutators.end(), [](const NCElement& c) { return c.is_zero(); });
}

std::vector<Letter> CentralitySummary::failures() const {
  std::vector<Letter> out;
  for (std::size_t l = 0; l < commutators.size(); ++l)
    if (!commutators[l].is_zero()) out.push_back(static_cast<Letter>(l));
  return out;
}

CentralitySummary verify_central(const NCElement& z, const HcAlgebra& alg) {
  return {alg.engine().commutators_with_generators(z)};
}

CentralSet central_generators(const HcAlgebra& alg, int d0) {
  const int n = alg.rank();
  const int m = alg.spec().deformation_degree();
  CentralSet out;
  out.n = n;
  out.params = alg.spec().params;
  for (int i = 1; i <= n; ++i) {
    const int cap = 2 * (i + m) + 4;
    int d = d0 > 0 ? d0 : std::max(1, i + m);
    std::optional<NCElement> c;
    while (true) {
      c = solve_correction(i, alg, d);
      if (c || d >= cap) break;
      d = std::min(2 * d, cap);
    }
    if (!c) throw EscalationCapReached("no correction for i = " + std::to_string(i) + " up to degree " + std::to_string(cap));
    NCElement eta = t_element(i, alg) - *c;
    if (!verify_central(eta, alg).all_zero())
      throw EscalationCapReached("solved eta_" + std::to_string(i) + " is not central");
    out.eta.push_back(std::move(eta));
    out.c.push_back(std::move(*c));
    out.degree_bounds.push_back(d);
  }
  return out;
}

bool uniqueness_relation_check(int i, const HcAlgebra& alg, const CentralSet& cset) {
  const NCElement b = beta(i, alg);
  for (int j = 1; j <= alg.rank(); ++j) {
    const NCElement y = alg.y(j);
    const NCElement lhs = alg.commutator(cset.c.at(i - 1), y);
    const NCElement rhs = alg.commutator(b, alg.commutator(cset.c.at(0), y));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<int> RaisReport::offset() const {
  std::optional<int> off;
  for (const auto& e : entries) {
    if (!e.symbol_index) return std::nullopt;
    if (off && *off != *e.symbol_index - e.k) return std::nullopt;
    off = *e.symbol_index - e.k;
  }
  return off;
}

bool RaisReport::exact() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const RaisEntry& e) { return e.exact_index == e.k + 1; });
}

bool RaisReport::up_to_lower() const {
  auto off = offset();
  return !entries.empty() && off && *off == 1 &&
         std::all_of(entries.begin(), entries.end(), [](const RaisEntry& e) { return e.lower.has_value(); });
}

namespace {

// coefficients a with target = sum_j a_j basis_j
std::optional<std::vector<Scalar>> express(const NCElement& target, const std::vector<NCElement>& basis, Field f) {
  if (basis.empty()) return target.is_zero() ? std::optional<std::vector<Scalar>>(std::vector<Scalar>{}) : std::nullopt;
  std::map<Word, SparseRow> rows_by_word;
  for (std::size_t m = 0; m < basis.size(); ++m)
    for (const auto& [w, c] : basis[m].terms()) rows_by_word[w].push_back({static_cast<int>(m), c});
  for (const auto& [w, c] : target.terms()) rows_by_word[w];
  std::vector<SparseRow> rows;
  std::vector<Scalar> rhs;
  for (auto& [w, row] : rows_by_word) {
    rows.push_back(std::move(row));
    rhs.push_back(target.coefficient(w));
  }
  return solve_linear(rows, rhs, static_cast<int>(basis.size()), f);
}

}  // namespace

RaisReport rais_elements_check(int n, int maxk, Field field) {
  if (maxk < 0 || maxk >= n) throw std::out_of_range("rais_elements_check needs 0 <= maxk < n");
  const HcAlgebra alg(AlgebraSpec::undeformed(n, field));
  const VarSpace space = VarSpace::lstar(n);
  std::vector<NCElement> t;
  std::vector<PolyOnLStar> t_sym;
  for (int r = 1; r <= n; ++r) {
    t.push_back(t_element(r, alg));
    t_sym.push_back(top_symbol(t.back(), alg));
  }

  RaisReport report;
  report.n = n;
  for (int k = 0; k <= maxk; ++k) {
    const PolyMatrix b = gradient_matrix(n, k, field);
    Polynomial f(space, field);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        f += Polynomial::variable(space, field, lstar_w(n, i)) * b.at(i, j).embed(space) *
             Polynomial::variable(space, field, lstar_u(n, j));
    RaisEntry e;
    e.k = k;
    e.image = sym_on_L(f, alg);
    e.f = std::move(f);
    const PolyOnLStar sym = top_symbol(e.image, alg);
    for (int r = 1; r <= n; ++r) {
      for (long s : {1L, -1L}) {
        const Scalar sc = field.make(s);
        if (!e.exact_index && e.image == t[r - 1] * sc) {
          e.exact_index = r;
          e.exact_sign = sc;
        }
        if (!e.symbol_index && sym == t_sym[r - 1] * sc) {
          e.symbol_index = r;
          e.symbol_sign = sc;
        }
      }
    }
    if (e.symbol_index) {
      const int r = *e.symbol_index;
      e.lower = express(e.image - t[r - 1] * e.symbol_sign, std::vector<NCElement>(t.begin(), t.begin() + (r - 1)), field);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

TopSymbolReport top_symbol_crosscheck(int i, const HcAlgebra& alg, const CentralSet& cset) {
  const int n = alg.rank();
  const Field f = alg.field();
  TopSymbolReport rep;
  rep.i = i;
  rep.lhs = Polynomial(VarSpace::matrix(n), f);
  rep.rhs = rep.lhs;
  const auto& b = alg.spec().params;
  int m = -1;
  for (int k = static_cast<int>(b.size()) - 1; k >= 0 && m < 0; --k)
    if (!b[k].is_zero()) m = k;
  if (m < 1) {
    rep.skipped = true;
    return rep;
  }
  rep.lhs = top_symbol_ug(cset.c.at(i - 1), alg);
  const BivarSeries gf = gf_coeffs(n, m, f);
  MatrixPoly target = sym_to_matrixpoly(gf.sym_coeff(m, n - i)).top_part();
  Scalar scale = b[m];
  if (i % 2) scale = -scale;
  rep.rhs = target * scale;
  rep.matches = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace icherednik
