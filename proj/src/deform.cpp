#include "icherednik/deform.hpp"

#include "icherednik/polyring.hpp"

namespace icherednik {

int DeformationParams::degree() const {
  for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k)
    if (!b[k].is_zero()) return k;
  return -1;
}

MatrixPoly r_poly(int k, int i, int j, int n, Field field) {
  if (k < 0) throw std::invalid_argument("r_poly needs k >= 0");
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("r_poly index out of range");
  const VarSpace space = VarSpace::matrix(n);
  const auto q = char_poly_coeffs(n, field);

  // det(1 - tA) = sum_j (-1)^j Q_j t^j, inverted term by term
  std::vector<Polynomial> h{Polynomial::constant(space, field.one())};
  for (int c = 1; c <= k; ++c) {
    Polynomial hc(space, field);
    for (int l = 1; l <= std::min(c, n); ++l) {
      Polynomial t = q[l] * h[c - l];
      if (l % 2) hc += t;
      else hc -= t;
    }
    h.push_back(std::move(hc));
  }

  const PolyMatrix x = PolyMatrix::coordinates(n, field);
  PolyMatrix power = PolyMatrix::identity(n, field);
  Polynomial out(space, field);
  for (int a = 0; a <= k; ++a) {
    out += power.at(i, j) * h[k - a];
    power = power * x;
  }
  return out;
}

AlgebraSpec pairing_from_params(const DeformationParams& params) {
  if (params.b.empty()) throw std::invalid_argument("deformation parameter list must be nonempty");
  const int n = params.n;
  const Field f = params.field;
  for (const auto& bk : params.b)
    if (!(bk.field() == f)) throw DomainMismatch("deformation parameter has the wrong characteristic");
  const int m = params.degree();
  if (f.p != 0 && m >= 0 && static_cast<std::uint32_t>(m) + 1 >= f.p)
    throw std::invalid_argument("characteristic " + std::to_string(f.p) + " needs deformation degree < p - 1");

  // Symmetrization only touches U(g), which does not see the table.
  const HcAlgebra ug(AlgebraSpec::undeformed(n, f));
  AlgebraSpec spec = AlgebraSpec::undeformed(n, f);
  spec.params = params.b;
  for (int k = 0; k < static_cast<int>(params.b.size()); ++k) {
    if (params.b[k].is_zero()) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) spec.c(i, j).add_scaled(symmetrization(r_poly(k, i, j, n, f), ug), params.b[k]);
  }
  return spec;
}

}  // namespace icherednik
