#pragma once

#include <vector>

#include "icherednik/pbw.hpp"
#include "icherednik/polynomial.hpp"

namespace icherednik {

/// Deformation parameter b = b_0 + b_1 tau + ... + b_m tau^m for rank n.
/// The top coefficient is not forced to 1.
struct DeformationParams {
  int n = 1;
  Field field;
  std::vector<Scalar> b;

  /// Index of the last nonzero coefficient; -1 when every b_k vanishes.
  int degree() const;
};

/// Coefficient of t^k in (x_i, (1 - tA)^(-1) y_j) det(1 - tA)^(-1):
///   sum_{a+c=k} (A^a)_{ij} h_c(A),   with sum_c h_c t^c = det(1 - tA)^(-1).
/// Homogeneous of degree k on gl_n.
MatrixPoly r_poly(int k, int i, int j, int n, Field field = {});

/// Builds the commutator table
///   [Y(i), X(j)] = sum_k b_k sym(r_k(i, j)).
/// This orientation (row index = V-index) is the one for which the table is
/// g-equivariant; the transposed orientation is not.
///
/// In characteristic p the degree m must satisfy m < p - 1.
AlgebraSpec pairing_from_params(const DeformationParams& params);

}  // namespace icherednik
