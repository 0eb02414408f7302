#include "icherednik/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace icherednik {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Determinant of the principal submatrix of X on the given (sorted) rows.
Polynomial principal_minor(int n, const std::vector<int>& rows, Field field) {
  const VarSpace space = VarSpace::matrix(n);
  Polynomial det(space, field);
  std::vector<int> perm = rows;
  do {
    Exponents e(space.count, 0);
    for (std::size_t a = 0; a < rows.size(); ++a) ++e[matrix_var(n, rows[a], perm[a])];
    det.add_term(e, field.make(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

void subsets(int n, int size, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolyMatrix::PolyMatrix(int n, Field field)
    : n_(n), entries_(static_cast<std::size_t>(n) * n, Polynomial(VarSpace::matrix(n), field)) {}

PolyMatrix PolyMatrix::identity(int n, Field field) {
  PolyMatrix m(n, field);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial::constant(VarSpace::matrix(n), field.one());
  return m;
}

PolyMatrix PolyMatrix::coordinates(int n, Field field) {
  PolyMatrix m(n, field);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.at(i, j) = Polynomial::variable(VarSpace::matrix(n), field, matrix_var(n, i, j));
  return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  for (std::size_t a = 0; a < entries_.size(); ++a) entries_[a] += o.entries_[a];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.n_, a.entries_.front().field());
  for (int i = 1; i <= a.n_; ++i)
    for (int j = 1; j <= a.n_; ++j)
      for (int l = 1; l <= a.n_; ++l) out.at(i, j) += a.at(i, l) * b.at(l, j);
  return out;
}

PolyMatrix operator*(const Polynomial& s, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

std::vector<MatrixPoly> char_poly_coeffs(int n, Field field) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<MatrixPoly> q;
  q.push_back(Polynomial::constant(VarSpace::matrix(n), field.one()));
  for (int j = 1; j <= n; ++j) {
    std::vector<std::vector<int>> rows;
    std::vector<int> cur;
    subsets(n, j, 1, cur, rows);
    Polynomial sum(VarSpace::matrix(n), field);
    for (const auto& r : rows) sum += principal_minor(n, r, field);
    q.push_back(std::move(sum));
  }
  return q;
}

PolyMatrix gradient_matrix(int n, int k, Field field) {
  if (k < 0 || k >= n) throw std::out_of_range("gradient_matrix needs 0 <= k < n");
  const auto q = char_poly_coeffs(n, field);
  const PolyMatrix x = PolyMatrix::coordinates(n, field);
  // Horner: B_k = X B_{k-1} + (-1)^k Q_k Id
  PolyMatrix b = PolyMatrix::identity(n, field);
  for (int step = 1; step <= k; ++step) {
    b = x * b;
    Polynomial sq = step % 2 ? -q[step] : q[step];
    b += sq * PolyMatrix::identity(n, field);
  }
  return b;
}

bool HessianReport::all_vanish() const {
  return std::all_of(entries.begin(), entries.end(), [](const HessianEntry& e) { return e.vanishes; });
}

HessianReport hessian_identity_check(int n, int k, Field field) {
  if (k < 1 || k > n) throw std::out_of_range("hessian_identity_check needs 1 <= k <= n");
  const auto q = char_poly_coeffs(n, field);
  const VarSpace lstar = VarSpace::lstar(n);
  HessianReport report{n, k, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Polynomial form(lstar, field);
      for (int t = 1; t <= n; ++t) {
        for (int p = 1; p <= n; ++p) {
          Polynomial d2 = q[k].derivative(matrix_var(n, i, p)).derivative(matrix_var(n, j, t));
          if (d2.is_zero()) continue;
          Polynomial uu = Polynomial::variable(lstar, field, lstar_u(n, t)) *
                          Polynomial::variable(lstar, field, lstar_u(n, p));
          form += d2.embed(lstar) * uu;
        }
      }
      bool zero = form.is_zero();
      report.entries.push_back({i, j, std::move(form), zero});
    }
  }
  return report;
}

BivarSeries::BivarSeries(int n, int max_tau, int max_t, Field field)
    : n_(n),
      max_tau_(max_tau),
      max_t_(max_t),
      grid_(static_cast<std::size_t>(max_tau + 1) * (max_t + 1), Polynomial(VarSpace::eigen(n), field)) {
  if (max_tau < 0 || max_t < 0) throw std::invalid_argument("negative truncation order");
}

const Polynomial& BivarSeries::coeff(int i, int j) const {
  if (i < 0 || i > max_tau_ || j < 0 || j > max_t_) throw std::out_of_range("series index outside truncation");
  return grid_[static_cast<std::size_t>(i) * (max_t_ + 1) + j];
}

void BivarSeries::set(int i, int j, Polynomial p) {
  if (i < 0 || i > max_tau_ || j < 0 || j > max_t_) throw std::out_of_range("series index outside truncation");
  grid_[static_cast<std::size_t>(i) * (max_t_ + 1) + j] = std::move(p);
}

Polynomial elementary_symmetric(int n, int j, Field field) {
  const VarSpace space = VarSpace::eigen(n);
  Polynomial out(space, field);
  if (j < 0 || j > n) return out;
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  subsets(n, j, 1, cur, sets);
  for (const auto& s : sets) {
    Exponents e(n, 0);
    for (int v : s) e[v - 1] = 1;
    out.add_term(e, field.one());
  }
  return out;
}

Polynomial complete_homogeneous(int n, int j, Field field) {
  const VarSpace space = VarSpace::eigen(n);
  Polynomial out(space, field);
  if (j < 0) return out;
  // all exponent vectors of weight j
  Exponents e(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = static_cast<std::uint16_t>(left);
      out.add_term(e, field.one());
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[var] = static_cast<std::uint16_t>(a);
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, j);
  return out;
}

BivarSeries gf_coeffs(int n, int m, int max_t, Field field) {
  if (m < 0) throw std::invalid_argument("tau order must be >= 0");
  if (max_t < n) throw std::invalid_argument("t order must be >= n");
  // [t^r] det(t - A) = (-1)^(n-r) e_{n-r}(lambda)
  std::vector<Polynomial> det_coeff;
  for (int r = 0; r <= n; ++r) {
    Polynomial e = elementary_symmetric(n, n - r, field);
    det_coeff.push_back((n - r) % 2 ? -e : e);
  }
  std::vector<Polynomial> h;
  for (int a = 0; a <= m; ++a) h.push_back(complete_homogeneous(n, a, field));

  // tau^i t^J: -sum_{k<=i} h_{i-k} [t^{J-k}] det(t - A)
  BivarSeries out(n, m, max_t, field);
  for (int i = 0; i <= m; ++i) {
    for (int big_j = 0; big_j <= max_t; ++big_j) {
      Polynomial c(VarSpace::eigen(n), field);
      for (int k = 0; k <= i; ++k) {
        int r = big_j - k;
        if (r < 0 || r > n) continue;
        c -= h[i - k] * det_coeff[r];
      }
      out.set(i, big_j, std::move(c));
    }
  }
  return out;
}

bool lambda_identity_check(int n, int m, Field field) {
  if (m < 1) throw std::invalid_argument("lambda_identity_check needs m >= 1");
  const BivarSeries gf = gf_coeffs(n, m, field);
  const VarSpace space = VarSpace::eigen(n);
  const Polynomial l1 = Polynomial::variable(space, field, 0);
  Polynomial sum(space, field);
  Polynomial power = Polynomial::constant(space, field.one());
  for (int j = 0; j <= gf.max_t(); ++j) {
    sum += gf.coeff(m, j) * power;
    power = power * l1;
  }
  return sum.is_zero();
}

MatrixPoly sym_to_matrixpoly(const SymPoly& s) {
  const int n = s.rank();
  const Field field = s.poly().field();
  const auto q = char_poly_coeffs(n, field);
  std::vector<Polynomial> e;
  for (int j = 0; j <= n; ++j) e.push_back(elementary_symmetric(n, j, field));

  Polynomial rest = s.poly();
  Polynomial out(VarSpace::matrix(n), field);
  while (!rest.is_zero()) {
    // lex-leading exponent of a symmetric polynomial is a partition
    const auto& [lead, coeff] = *rest.terms().rbegin();
    Exponents a = lead;
    Scalar c = coeff;
    Polynomial in_e = Polynomial::constant(VarSpace::eigen(n), c);
    Polynomial in_q = Polynomial::constant(VarSpace::matrix(n), c);
    for (int j = 1; j <= n; ++j) {
      int mult = a[j - 1] - (j < n ? a[j] : 0);
      if (mult < 0) throw NotSymmetric("leading exponent is not a partition");
      if (mult == 0) continue;
      in_e = in_e * e[j].pow(mult);
      in_q = in_q * q[j].pow(mult);
    }
    rest -= in_e;
    out += in_q;
  }
  return out;
}

Polynomial diagonal_restriction(const MatrixPoly& p) {
  const int n = p.space().rank;
  const Field field = p.field();
  const VarSpace eig = VarSpace::eigen(n);
  std::vector<Polynomial> images;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      images.push_back(i == j ? Polynomial::variable(eig, field, i - 1) : Polynomial(eig, field));
  return p.substitute(images);
}

}  // namespace icherednik
