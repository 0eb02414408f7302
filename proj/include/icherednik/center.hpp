#pragma once

// Central elements of H_c: the Ug-central beta_i, the undeformed central t_i,
// the corrections c_i in Z(Ug) and eta_i = t_i - c_i.

#include <optional>
#include <string>
#include <vector>

#include "icherednik/pbw.hpp"

namespace icherednik {

/// sym(Q_i), 1 <= i <= n.
NCElement beta(int i, const HcAlgebra& alg);

/// sum_j [beta_i, Y(j)] X(j).
NCElement t_element(int i, const HcAlgebra& alg);

/// Monomials beta_1^a_1 ... beta_n^a_n with sum_j j a_j <= d, in the order of
/// increasing weighted degree.
struct CenterBasisAnsatz {
  int degree_bound = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<NCElement> elements;
};

/// include_constant = false drops the empty monomial.
CenterBasisAnsatz center_ansatz(const HcAlgebra& alg, int d, bool include_constant = false);

/// The element c of the ansatz span (constant term zero) with
/// [t_i - c, Y(1)] = 0, or nullopt if no such c exists at this degree bound.
std::optional<NCElement> solve_correction(int i, const HcAlgebra& alg, int d);

struct CentralitySummary {
  std::vector<NCElement> commutators;  ///< [z, g] for every generator g, in letter order
  bool all_zero() const;
  /// Letters with a nonzero commutator.
  std::vector<Letter> failures() const;
};

CentralitySummary verify_central(const NCElement& z, const HcAlgebra& alg);

struct CentralSet {
  int n = 0;
  std::vector<NCElement> eta;  ///< eta_1..eta_n
  std::vector<NCElement> c;    ///< corrections c_1..c_n
  std::vector<int> degree_bounds;  ///< the ansatz bound that succeeded for each i
  std::vector<Scalar> params;      ///< copied from the spec
};

class EscalationCapReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves for c_1..c_n starting at d0 = i + m (m the Ug-degree of the table),
/// doubling up to 2(i + m) + 4, then requires every eta_i to be central.
/// d0 > 0 overrides the starting bound.
CentralSet central_generators(const HcAlgebra& alg, int d0 = 0);

/// [c_i, Y(j)] == [beta_i, [c_1, Y(j)]] for every j.
bool uniqueness_relation_check(int i, const HcAlgebra& alg, const CentralSet& cset);

struct RaisEntry {
  int k = 0;
  PolyOnLStar f{VarSpace{}, Field{}};  ///< sum_{i,j} w(i) (B_k)_{ij} u(j)
  NCElement image;                     ///< sym_on_L(f)
  std::optional<int> exact_index;      ///< r with image == exact_sign * t_r
  Scalar exact_sign;
  std::optional<int> symbol_index;     ///< r with top symbols equal up to symbol_sign
  Scalar symbol_sign;
  /// a_1..a_{r-1} with image = symbol_sign * t_r + sum_j a_j t_j, r = symbol_index.
  std::optional<std::vector<Scalar>> lower;
};

struct RaisReport {
  int n = 0;
  std::vector<RaisEntry> entries;
  /// symbol_index - k when it is the same for every entry.
  std::optional<int> offset() const;
  /// Every image is exactly +-t_{k+1}.
  bool exact() const;
  /// Offset 1 and every image is +-t_{k+1} plus a combination of t_1..t_k.
  bool up_to_lower() const;
};

/// For k = 0..maxk (maxk < n) compares sym_on_L(f_k) with t_1..t_n in the
/// undeformed algebra of rank n. Observed for n <= 3: the symbol of the image
/// is (-1)^k times that of t_{k+1}, and the image differs from (-1)^k t_{k+1}
/// by a nonzero combination of lower t_j once k >= 1.
RaisReport rais_elements_check(int n, int maxk, Field field = {});

struct TopSymbolReport {
  int i = 0;
  bool skipped = false;   ///< no deformation parameters or m = 0
  MatrixPoly lhs{VarSpace{}, Field{}};  ///< top symbol of c_i
  MatrixPoly rhs{VarSpace{}, Field{}};  ///< (-1)^i b_m * top part of the gf coefficient at tau^m t^(n-i)
  bool matches = false;
};

/// The top symbol of c_i against the generating function. The scale factor is
/// (-1)^i b_m for the convention beta_i = sym(Q_i).
TopSymbolReport top_symbol_crosscheck(int i, const HcAlgebra& alg, const CentralSet& cset);

}  // namespace icherednik
