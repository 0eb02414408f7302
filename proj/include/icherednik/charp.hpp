#pragma once

// Characteristic p: the p-center of H_c over F_p and the rank one algebra
// generated by e, h, f with [h,e] = e, [h,f] = -f, [e,f] = c(h).

#include <memory>
#include <string>
#include <vector>

#include "icherednik/pbw.hpp"
#include "icherednik/rewrite_algebra.hpp"

namespace icherednik {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CentralityEntry {
  std::string name;   ///< "Y(1)^p", "E(1,1)^p-E(1,1)", ...
  NCElement element;
  bool central = false;
};

struct PCenterReport {
  std::uint32_t p = 0;
  std::vector<CentralityEntry> entries;
  bool pairwise_commuting = false;
  bool passed() const;
};

/// Checks that Y(i)^p, X(i)^p, E(i,i)^p - E(i,i) and E(i,j)^p (i != j) are
/// central. Needs p > n and p > (Ug-degree of the table) + 1.
PCenterReport p_center_check(const HcAlgebra& alg);

/// ad(a)^p(w) == [a^p, w] for every w in samples.
bool frobenius_identity_check(const NCElement& a, const std::vector<NCElement>& samples, const RewriteAlgebra& eng);

/// c(h) = c[0] + c[1] h + ... over F_p with deg c < p - 1.
struct Gl1Spec {
  Field field;
  std::vector<Scalar> c;

  Gl1Spec(std::uint32_t p, std::vector<Scalar> coeffs);
  Gl1Spec(std::uint32_t p, const std::vector<long>& coeffs);
  std::uint32_t p() const { return field.p; }
  /// -1 for c = 0.
  int degree() const;
};

/// Letters e < h < f.
class Gl1Algebra {
 public:
  static constexpr Letter E = 0, H = 1, F = 2;

  explicit Gl1Algebra(Gl1Spec spec);

  const Gl1Spec& spec() const { return spec_; }
  const RewriteAlgebra& engine() const { return *engine_; }
  Field field() const { return spec_.field; }
  NCElement e() const { return engine_->generator(E); }
  NCElement h() const { return engine_->generator(H); }
  NCElement f() const { return engine_->generator(F); }
  /// sum_k coeffs[k] h^k
  NCElement poly_in_h(const std::vector<Scalar>& coeffs) const;
  /// e^a h^b f^c
  NCElement monomial(int a, int b, int c) const;

 private:
  Gl1Spec spec_;
  std::unique_ptr<RewriteAlgebra> engine_;
};

Gl1Algebra gl1_build(const Gl1Spec& g);

/// z with z(h+1) - z(h) = c(h) and z(0) = 0, as coefficients z[0..].
std::vector<Scalar> casimir_z(const Gl1Spec& g);
/// ef + z(h).
NCElement gl1_casimir(const Gl1Algebra& alg);

/// e^p, f^p, h^p - h and the Casimir.
PCenterReport gl1_p_center_check(const Gl1Algebra& alg);

struct Z0RankReport {
  std::uint32_t p = 0;
  int window = 0;           ///< exponents range over [0, window)
  int relation_rank = 0;
  int quotient_dimension = 0;
  int independent_small = 0;  ///< rank of {e^a h^b f^c : a, b, c < p} in the quotient
};

/// Span of e^a h^b f^c with a, b, c < p * bound modulo the relations z * mu
/// (z in e^p, h^p - h, f^p) that stay inside the window.
Z0RankReport z0_rank_report(const Gl1Algebra& alg, int bound = 2);
/// independent_small of the report; equals p^3 when the small monomials are
/// independent.
int z0_rank_check(const Gl1Algebra& alg, int bound = 2);

}  // namespace icherednik
