#pragma once

// Commutative polynomial machinery on gl_n: characteristic-polynomial
// coefficients, the matrices B_k, symmetric functions of eigenvalues and the
// two-variable generating function whose coefficients govern the top symbols
// of the central corrections.

#include <vector>

#include "icherednik/polynomial.hpp"

namespace icherednik {

/// Square matrix whose entries are MatrixPolys of one rank.
class PolyMatrix {
 public:
  PolyMatrix(int n, Field field);

  static PolyMatrix identity(int n, Field field);
  /// The generic matrix X with entries X_ij = e(i,j).
  static PolyMatrix coordinates(int n, Field field);

  int size() const { return n_; }
  // 1-based
  const Polynomial& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }
  Polynomial& at(int i, int j) { return entries_[(i - 1) * n_ + (j - 1)]; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Polynomial& s, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int n_;
  std::vector<Polynomial> entries_;
};

/// [Q_0, ..., Q_n] with det(t Id - X) = sum_j (-1)^j t^(n-j) Q_j(X). Q_j is the
/// sum of the principal j x j minors of X.
std::vector<MatrixPoly> char_poly_coeffs(int n, Field field = {});

/// B_k(X) = X^k - Q_1 X^(k-1) + ... + (-1)^k Q_k Id, for 0 <= k < n.
///
/// Relation to the gradient, verified symbolically for n <= 3:
///   dQ_{k+1}/de(i,j) = (-1)^k (B_k)_{j,i},
/// i.e. B_k is (up to the sign (-1)^k) the transposed gradient of Q_{k+1}.
PolyMatrix gradient_matrix(int n, int k, Field field = {});

struct HessianEntry {
  int i = 0;
  int j = 0;
  PolyOnLStar form;  ///< sum_{t,p} d^2Q_k/de(i,p)de(j,t) * u(t) u(p)
  bool vanishes = false;
};

struct HessianReport {
  int n = 0;
  int k = 0;
  std::vector<HessianEntry> entries;
  bool all_vanish() const;
};

HessianReport hessian_identity_check(int n, int k, Field field = {});

/// Truncated series sum_{i<=max_tau, j<=max_t} c_{i,j} tau^i t^j with symmetric
/// eigenvalue-polynomial coefficients.
class BivarSeries {
 public:
  BivarSeries(int n, int max_tau, int max_t, Field field);

  int rank() const { return n_; }
  int max_tau() const { return max_tau_; }
  int max_t() const { return max_t_; }
  /// 0 <= i <= max_tau, 0 <= j <= max_t.
  const Polynomial& coeff(int i, int j) const;
  SymPoly sym_coeff(int i, int j) const { return SymPoly(coeff(i, j)); }
  void set(int i, int j, Polynomial p);

 private:
  int n_, max_tau_, max_t_;
  std::vector<Polynomial> grid_;
};

/// Expansion of det(t - A) / ((t tau - 1) det(1 - tau A)) at A = diag(lambda),
/// using (t tau - 1)^(-1) = -sum_k t^k tau^k. Requires max_t >= n; max_t = n + m
/// captures every nonzero coefficient up to tau^m.
BivarSeries gf_coeffs(int n, int m, int max_t, Field field = {});
inline BivarSeries gf_coeffs(int n, int m, Field field = {}) { return gf_coeffs(n, m, n + m, field); }

/// Substitutes t := lambda(1) into the tau^m row of gf_coeffs and reports
/// whether the result vanishes identically.
bool lambda_identity_check(int n, int m, Field field = {});

/// Elementary symmetric polynomial e_j(lambda(1..n)).
Polynomial elementary_symmetric(int n, int j, Field field = {});
/// Complete homogeneous symmetric polynomial h_j(lambda(1..n)).
Polynomial complete_homogeneous(int n, int j, Field field = {});

/// Rewrites s in the elementary symmetric basis and substitutes Q_j for e_j.
/// The reduction is the leading-term algorithm over Z, so no division is
/// needed and every characteristic is supported.
MatrixPoly sym_to_matrixpoly(const SymPoly& s);

/// Restriction of a polynomial on gl_n to diag(lambda(1), ..., lambda(n)).
Polynomial diagonal_restriction(const MatrixPoly& p);

}  // namespace icherednik
