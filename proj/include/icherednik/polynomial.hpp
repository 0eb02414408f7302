#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "icherednik/scalar.hpp"

namespace icherednik {

/// Which coordinate ring a commutative polynomial lives in. The variable
/// layout is fixed globally:
///   Matrix: e(1,1), e(1,2), ..., e(1,n), e(2,1), ..., e(n,n)   (row-major)
///   Eigen:  lambda(1), ..., lambda(n)
///   LStar:  the Matrix block, then u(1..n) (V side), then w(1..n) (V* side)
///   Generic: z(1), ..., z(count)
enum class VarKind { Matrix, Eigen, LStar, Generic };

struct VarSpace {
  VarKind kind = VarKind::Generic;
  int rank = 0;
  int count = 0;

  static VarSpace matrix(int n) { return {VarKind::Matrix, n, n * n}; }
  static VarSpace eigen(int n) { return {VarKind::Eigen, n, n}; }
  static VarSpace lstar(int n) { return {VarKind::LStar, n, n * n + 2 * n}; }
  static VarSpace generic(int count) { return {VarKind::Generic, 0, count}; }

  std::string var_name(int index) const;
  std::vector<std::string> var_names() const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;
};

// 0-based variable indices for 1-based matrix/vector coordinates.
inline int matrix_var(int n, int i, int j) { return (i - 1) * n + (j - 1); }
inline int lstar_u(int n, int i) { return n * n + (i - 1); }
inline int lstar_w(int n, int i) { return n * n + n + (i - 1); }

using Exponents = std::vector<std::uint16_t>;

/// Sparse commutative polynomial with exact coefficients. No zero
/// coefficient is ever stored; every exponent vector has space().count
/// entries.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  Polynomial(VarSpace space, Field field) : space_(space), field_(field) {}

  static Polynomial constant(VarSpace space, const Scalar& c);
  static Polynomial variable(VarSpace space, Field field, int var);
  static Polynomial monomial(VarSpace space, Exponents exps, const Scalar& c);

  const VarSpace& space() const { return space_; }
  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int degree) const;
  /// Highest-degree homogeneous component (zero stays zero).
  Polynomial top_part() const { return homogeneous_part(total_degree()); }

  Scalar coefficient(const Exponents& exps) const;
  void add_term(const Exponents& exps, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(int var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replace variable v by images[v]; all images share one target space.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Reinterpret in a larger space whose leading variables coincide with ours
  /// (for example Matrix(n) inside LStar(n)).
  Polynomial embed(VarSpace target) const;

  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;

  VarSpace space_;
  Field field_;
  TermMap terms_;
};

using MatrixPoly = Polynomial;   ///< over VarSpace::matrix(n)
using PolyOnLStar = Polynomial;  ///< over VarSpace::lstar(n)

/// Thrown by SymPoly when its input is not symmetric in the eigenvalues.
class NotSymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial in lambda(1..n), checked on construction to be invariant under
/// every transposition of the variables.
class SymPoly {
 public:
  explicit SymPoly(Polynomial p);

  const Polynomial& poly() const { return poly_; }
  int rank() const { return poly_.space().rank; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.poly_ == b.poly_; }

 private:
  Polynomial poly_;
};

/// True iff swapping any two eigenvalue variables leaves p unchanged.
bool is_symmetric(const Polynomial& p);

}  // namespace icherednik
