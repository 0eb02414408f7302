#include "icherednik/pbw.hpp"

#include <algorithm>
#include <regex>

namespace icherednik {

std::string Generator::token() const {
  switch (kind) {
    case GenKind::E:
      return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case GenKind::Y:
      return "Y(" + std::to_string(i) + ")";
    case GenKind::X:
      return "X(" + std::to_string(i) + ")";
  }
  return {};
}

GlAlphabet::GlAlphabet(int n) : n_(n), e_index_(static_cast<std::size_t>(n) * n, -1) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n * n + 2 * n > 255) throw std::invalid_argument("rank too large for the letter type");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) order_.push_back({GenKind::E, i, j});
  for (int i = 1; i <= n; ++i) order_.push_back({GenKind::E, i, i});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) order_.push_back({GenKind::E, i, j});
  for (int i = 1; i <= n; ++i) order_.push_back({GenKind::Y, i, 0});
  for (int i = 1; i <= n; ++i) order_.push_back({GenKind::X, i, 0});
  for (std::size_t l = 0; l < order_.size(); ++l)
    if (order_[l].kind == GenKind::E) e_index_[(order_[l].i - 1) * n + (order_[l].j - 1)] = static_cast<int>(l);
}

Letter GlAlphabet::e(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("E index out of range");
  return static_cast<Letter>(e_index_[(i - 1) * n_ + (j - 1)]);
}

Letter GlAlphabet::y(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("Y index out of range");
  return static_cast<Letter>(n_ * n_ + i - 1);
}

Letter GlAlphabet::x(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("X index out of range");
  return static_cast<Letter>(n_ * n_ + n_ + i - 1);
}

Letter GlAlphabet::letter(const Generator& g) const {
  switch (g.kind) {
    case GenKind::E:
      return e(g.i, g.j);
    case GenKind::Y:
      return y(g.i);
    case GenKind::X:
      return x(g.i);
  }
  throw std::logic_error("bad generator kind");
}

Letter GlAlphabet::parse(const std::string& token) const {
  static const std::regex e_re(R"(E\((\d+),(\d+)\))");
  static const std::regex v_re(R"(([YX])\((\d+)\))");
  std::smatch m;
  if (std::regex_match(token, m, e_re)) return e(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(token, m, v_re)) return m[1] == "Y" ? y(std::stoi(m[2])) : x(std::stoi(m[2]));
  throw std::invalid_argument("unknown generator token '" + token + "'");
}

std::vector<int> GlAlphabet::weight(Letter l) const {
  std::vector<int> w(n_, 0);
  const Generator& g = at(l);
  switch (g.kind) {
    case GenKind::E:
      ++w[g.i - 1];
      --w[g.j - 1];
      break;
    case GenKind::Y:
      ++w[g.i - 1];
      break;
    case GenKind::X:
      --w[g.i - 1];
      break;
  }
  return w;
}

AlgebraSpec AlgebraSpec::undeformed(int n, Field field) {
  AlgebraSpec s;
  s.n = n;
  s.field = field;
  s.ctable.assign(static_cast<std::size_t>(n) * n, NCElement(field));
  return s;
}

bool AlgebraSpec::is_undeformed() const {
  return std::all_of(ctable.begin(), ctable.end(), [](const NCElement& c) { return c.is_zero(); });
}

int AlgebraSpec::deformation_degree() const {
  int d = 0;
  for (const auto& c : ctable) d = std::max(d, c.max_length().value_or(0));
  return d;
}

namespace {

NCElement gen_combo(Field f, std::initializer_list<std::pair<Letter, long>> terms) {
  NCElement out(f);
  for (auto [l, c] : terms) out.add_term({l}, f.make(c));
  return out;
}

}  // namespace

HcAlgebra::HcAlgebra(AlgebraSpec spec) : spec_(std::move(spec)), alphabet_(spec_.n) {
  const int n = spec_.n;
  if (static_cast<int>(spec_.ctable.size()) != n * n) throw std::invalid_argument("ctable must have n*n entries");
  for (const auto& c : spec_.ctable) {
    if (!(c.field() == spec_.field)) throw DomainMismatch("ctable entry has the wrong characteristic");
    for (const auto& [w, coef] : c.terms())
      for (Letter l : w)
        if (l >= alphabet_.size() || alphabet_.is_vector_letter(l))
          throw std::invalid_argument("ctable entries must be supported on E-letters");
  }

  std::vector<std::string> names;
  for (const auto& g : alphabet_.generators()) names.push_back(g.token());
  const Field f = spec_.field;
  const GlAlphabet& al = alphabet_;
  const AlgebraSpec& sp = spec_;

  auto bracket = [&](Letter a, Letter b) -> NCElement {
    const Generator& ga = al.at(a);
    const Generator& gb = al.at(b);
    if (ga.kind == GenKind::E) {
      // both E since E letters come first
      NCElement out(f);
      if (ga.j == gb.i) out.add_term({al.e(ga.i, gb.j)}, f.one());
      if (gb.j == ga.i) out.add_term({al.e(gb.i, ga.j)}, -f.one());
      return out;
    }
    if (gb.kind == GenKind::E) {
      if (ga.kind == GenKind::Y)  // [Y_k, E_ij] = -delta_jk Y_i
        return gb.j == ga.i ? gen_combo(f, {{al.y(gb.i), -1}}) : NCElement(f);
      // [X_k, E_ij] = delta_ki X_j
      return gb.i == ga.i ? gen_combo(f, {{al.x(gb.j), 1}}) : NCElement(f);
    }
    if (ga.kind == gb.kind) return NCElement(f);
    // a = X(j), b = Y(i):  [X_j, Y_i] = -c(i, j)
    return -sp.c(gb.i, ga.i);
  };
  engine_ = std::make_unique<RewriteAlgebra>(f, std::move(names), bracket);
}

HcAlgebraPtr HcAlgebra::make(AlgebraSpec spec) { return std::make_shared<const HcAlgebra>(std::move(spec)); }

NCElement multiply(const NCElement& a, const NCElement& b, const HcAlgebra& alg) { return alg.multiply(a, b); }

NCElement commutator(const NCElement& a, const NCElement& b, const HcAlgebra& alg) { return alg.commutator(a, b); }

NCElement anti_involution(const NCElement& a, const HcAlgebra& alg) {
  const GlAlphabet& al = alg.alphabet();
  std::vector<Letter> image(al.size());
  for (int l = 0; l < al.size(); ++l) {
    Generator g = al.at(static_cast<Letter>(l));
    switch (g.kind) {
      case GenKind::E:
        std::swap(g.i, g.j);
        break;
      case GenKind::Y:
        g.kind = GenKind::X;
        break;
      case GenKind::X:
        g.kind = GenKind::Y;
        break;
    }
    image[l] = al.letter(g);
  }
  NCElement out(alg.field());
  for (const auto& [w, c] : a.terms()) {
    Word rev;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back(image[*it]);
    out.add_scaled(alg.normal_form(rev), c);
  }
  return out;
}

namespace {

NCElement symmetrize_with(const Polynomial& p, const HcAlgebra& alg, const std::vector<Letter>& var_letter) {
  const Field f = alg.field();
  NCElement out(f);
  for (const auto& [exps, coef] : p.terms()) {
    Word letters;
    for (std::size_t v = 0; v < exps.size(); ++v) letters.insert(letters.end(), exps[v], var_letter[v]);
    if (f.p != 0 && letters.size() >= f.p)
      throw SymmetrizationError("symmetrization of degree " + std::to_string(letters.size()) +
                                " needs characteristic > degree");
    std::sort(letters.begin(), letters.end());
    NCElement sum(f);
    long count = 0;
    do {
      sum += alg.normal_form(letters);
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    out.add_scaled(sum, coef / f.make(count));
  }
  return out;
}

}  // namespace

NCElement symmetrization(const MatrixPoly& p, const HcAlgebra& alg) {
  const int n = alg.rank();
  if (!(p.space() == VarSpace::matrix(n))) throw DomainMismatch("symmetrization expects a polynomial on gl_n");
  std::vector<Letter> vl;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vl.push_back(alg.alphabet().e(i, j));
  return symmetrize_with(p, alg, vl);
}

NCElement sym_on_L(const PolyOnLStar& p, const HcAlgebra& alg) {
  const int n = alg.rank();
  if (!(p.space() == VarSpace::lstar(n))) throw DomainMismatch("sym_on_L expects a polynomial on L*");
  std::vector<Letter> vl;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vl.push_back(alg.alphabet().e(i, j));
  for (int i = 1; i <= n; ++i) vl.push_back(alg.alphabet().y(i));
  for (int i = 1; i <= n; ++i) vl.push_back(alg.alphabet().x(i));
  return symmetrize_with(p, alg, vl);
}

PolyOnLStar top_symbol(const NCElement& a, const HcAlgebra& alg) {
  const int n = alg.rank();
  const VarSpace space = VarSpace::lstar(n);
  Polynomial out(space, alg.field());
  auto len = a.max_length();
  if (!len) return out;
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int>(w.size()) != *len) continue;
    Exponents e(space.count, 0);
    for (Letter l : w) {
      const Generator& g = alg.alphabet().at(l);
      switch (g.kind) {
        case GenKind::E:
          ++e[matrix_var(n, g.i, g.j)];
          break;
        case GenKind::Y:
          ++e[lstar_u(n, g.i)];
          break;
        case GenKind::X:
          ++e[lstar_w(n, g.i)];
          break;
      }
    }
    out.add_term(e, c);
  }
  return out;
}

MatrixPoly top_symbol_ug(const NCElement& a, const HcAlgebra& alg) {
  const int n = alg.rank();
  Polynomial out(VarSpace::matrix(n), alg.field());
  auto len = a.max_length();
  if (!len) return out;
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int>(w.size()) != *len) continue;
    Exponents e(n * n, 0);
    for (Letter l : w) {
      const Generator& g = alg.alphabet().at(l);
      if (g.kind != GenKind::E) throw std::invalid_argument("top_symbol_ug: element is not in U(g)");
      ++e[matrix_var(n, g.i, g.j)];
    }
    out.add_term(e, c);
  }
  return out;
}

std::optional<int> filtration_degree(const NCElement& a, const HcAlgebra& alg) {
  if (a.is_zero()) return std::nullopt;
  int d = 0;
  for (const auto& [w, c] : a.terms()) {
    int k = static_cast<int>(std::count_if(w.begin(), w.end(), [&](Letter l) { return alg.alphabet().is_vector_letter(l); }));
    d = std::max(d, k);
  }
  return d;
}

PbwReport check_pbw_consistency(const HcAlgebra& alg, int maxdeg) {
  if (maxdeg < 3) throw std::invalid_argument("check_pbw_consistency needs maxdeg >= 3");
  const RewriteAlgebra& eng = alg.engine();
  const int N = eng.num_generators();
  const Field f = alg.field();
  PbwReport report;
  report.maxdeg = maxdeg;

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        const Letter g1 = static_cast<Letter>(a), g2 = static_cast<Letter>(b), g3 = static_cast<Letter>(c);
        NCElement first(f), second(f);
        const NCElement left_pair = eng.rewrite_pair(g1, g2);
        const NCElement right_pair = eng.rewrite_pair(g2, g3);
        for (const auto& [w, coef] : left_pair.terms()) {
          Word full = w;
          full.push_back(g3);
          first.add_scaled(eng.normal_form(full), coef);
        }
        for (const auto& [w, coef] : right_pair.terms()) {
          Word full{g1};
          full.insert(full.end(), w.begin(), w.end());
          second.add_scaled(eng.normal_form(full), coef);
        }
        ++report.overlaps_checked;
        if (!(first == second)) report.overlaps.push_back({g1, g2, g3, first - second});
      }
    }
  }

  for (int len = 3; len <= maxdeg; ++len) {
    Word w(len, 0);
    while (true) {
      NCElement left = eng.normal_form(w);
      NCElement right = eng.normal_form_right(w);
      ++report.words_checked;
      if (!(left == right)) report.associativity.push_back({w, left - right});
      int pos = len - 1;
      while (pos >= 0 && w[pos] == N - 1) w[pos--] = 0;
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return report;
}

std::vector<EquivarianceFailure> equivariance_failures(const HcAlgebra& alg) {
  const int n = alg.rank();
  const AlgebraSpec& s = alg.spec();
  std::vector<EquivarianceFailure> out;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          NCElement defect = alg.commutator(alg.e(k, l), s.c(i, j));
          if (l == i) defect -= s.c(k, j);
          if (k == j) defect += s.c(i, l);
          if (!defect.is_zero()) out.push_back({k, l, i, j, std::move(defect)});
        }
  return out;
}

bool ctable_anti_involution_compatible(const HcAlgebra& alg) {
  const int n = alg.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(anti_involution(alg.spec().c(i, j), alg) == alg.spec().c(j, i))) return false;
  return true;
}

}  // namespace icherednik
