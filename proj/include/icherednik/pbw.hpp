#pragma once

// Infinitesimal Cherednik algebras H_c of gl_n as rewriting algebras on the
// generators E(i,j), Y(i), X(i), plus the structural operations used by the
// rest of the library: symmetrization, the anti-involution, the filtration
// and the PBW (diamond-lemma) consistency check.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icherednik/polynomial.hpp"
#include "icherednik/rewrite_algebra.hpp"

namespace icherednik {

enum class GenKind { E, Y, X };

struct Generator {
  GenKind kind = GenKind::E;
  int i = 0;  ///< 1-based
  int j = 0;  ///< 1-based, E only

  bool is_lowering() const { return kind == GenKind::E && i > j; }
  bool is_diagonal() const { return kind == GenKind::E && i == j; }
  bool is_raising() const { return kind == GenKind::E && i < j; }
  /// "E(i,j)", "Y(i)" or "X(i)".
  std::string token() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// The ordered generator set for rank n:
///   lowering E(i,j), i > j, lex in (i,j);  diagonal E(i,i);  raising E(i,j),
///   i < j, lex in (i,j);  Y(1..n);  X(1..n).
class GlAlphabet {
 public:
  explicit GlAlphabet(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(order_.size()); }
  const Generator& at(Letter l) const { return order_.at(l); }
  const std::vector<Generator>& generators() const { return order_; }

  Letter e(int i, int j) const;
  Letter y(int i) const;
  Letter x(int i) const;
  Letter letter(const Generator& g) const;
  /// Parses a token produced by Generator::token(); throws on garbage.
  Letter parse(const std::string& token) const;

  /// Letters counting towards the filtration degree (Y and X).
  bool is_vector_letter(Letter l) const { return order_.at(l).kind != GenKind::E; }
  /// Weight under the diagonal torus, as an integer vector of length n.
  std::vector<int> weight(Letter l) const;

 private:
  int n_;
  std::vector<Generator> order_;
  std::vector<int> e_index_;  // (i-1)*n + (j-1)
};

/// Rank, characteristic and commutator table [Y(i), X(j)] = ctable(i, j) of one
/// algebra H_c. Table entries are normal combinations of E-letters of
/// GlAlphabet(n).
struct AlgebraSpec {
  int n = 1;
  Field field;
  std::vector<NCElement> ctable;  ///< (i-1)*n + (j-1)
  /// Deformation parameters (b_0, ..., b_m) when built by pairing_from_params;
  /// empty for hand-written tables.
  std::vector<Scalar> params;

  static AlgebraSpec undeformed(int n, Field field = {});

  const NCElement& c(int i, int j) const { return ctable.at((i - 1) * n + (j - 1)); }
  NCElement& c(int i, int j) { return ctable.at((i - 1) * n + (j - 1)); }
  bool is_undeformed() const;
  /// Longest E-word occurring in the table (0 for scalar or zero tables).
  int deformation_degree() const;
};

/// H_c together with its rewriting engine.
class HcAlgebra {
 public:
  /// Throws std::invalid_argument if a table entry contains Y/X letters or the
  /// table has the wrong size.
  explicit HcAlgebra(AlgebraSpec spec);

  static std::shared_ptr<const HcAlgebra> make(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  int rank() const { return spec_.n; }
  Field field() const { return spec_.field; }
  const GlAlphabet& alphabet() const { return alphabet_; }
  const RewriteAlgebra& engine() const { return *engine_; }

  NCElement one() const { return engine_->one(); }
  NCElement zero() const { return engine_->zero(); }
  NCElement constant(const Scalar& c) const { return engine_->constant(c); }
  NCElement constant(long c) const { return engine_->constant(field().make(c)); }
  NCElement e(int i, int j) const { return engine_->generator(alphabet_.e(i, j)); }
  NCElement y(int i) const { return engine_->generator(alphabet_.y(i)); }
  NCElement x(int i) const { return engine_->generator(alphabet_.x(i)); }
  NCElement generator(Letter l) const { return engine_->generator(l); }

  NCElement multiply(const NCElement& a, const NCElement& b) const { return engine_->multiply(a, b); }
  NCElement commutator(const NCElement& a, const NCElement& b) const { return engine_->commutator(a, b); }
  NCElement power(const NCElement& a, unsigned k) const { return engine_->power(a, k); }
  NCElement normal_form(const Word& w) const { return engine_->normal_form(w); }

  std::string to_string(const NCElement& a) const { return engine_->to_string(a); }

 private:
  AlgebraSpec spec_;
  GlAlphabet alphabet_;
  std::unique_ptr<RewriteAlgebra> engine_;
};

using HcAlgebraPtr = std::shared_ptr<const HcAlgebra>;

// The operations below follow the function-per-concept layout of the other
// modules; they only forward to the engine where nothing else is needed.

NCElement multiply(const NCElement& a, const NCElement& b, const HcAlgebra& alg);
NCElement commutator(const NCElement& a, const NCElement& b, const HcAlgebra& alg);

/// Product-reversing map E(i,j) -> E(j,i), Y(i) <-> X(i).
NCElement anti_involution(const NCElement& a, const HcAlgebra& alg);

/// Thrown when d! is not invertible (degree >= p in characteristic p).
class SymmetrizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear map k[g] -> U(g): a monomial of degree d goes to the average of the
/// d! orderings of its letters.
NCElement symmetrization(const MatrixPoly& p, const HcAlgebra& alg);
/// Same over the larger alphabet of L = g + V + V*: u(i) -> Y(i), w(i) -> X(i).
NCElement sym_on_L(const PolyOnLStar& p, const HcAlgebra& alg);

/// Commutative symbol of the longest-word part of a (words read as
/// commutative monomials on the lstar coordinates). Zero maps to zero.
PolyOnLStar top_symbol(const NCElement& a, const HcAlgebra& alg);
/// Same restricted to pure-U(g) elements; result lives on the matrix space.
MatrixPoly top_symbol_ug(const NCElement& a, const HcAlgebra& alg);

/// Max number of Y/X letters over the terms; nullopt encodes the zero element.
std::optional<int> filtration_degree(const NCElement& a, const HcAlgebra& alg);

struct OverlapFailure {
  Letter g1 = 0, g2 = 0, g3 = 0;
  NCElement difference;  ///< (resolve g1 g2 first) - (resolve g2 g3 first)
};

struct AssociativityFailure {
  Word word;
  NCElement difference;  ///< left fold - right fold
};

struct PbwReport {
  int maxdeg = 0;
  std::size_t overlaps_checked = 0;
  std::size_t words_checked = 0;
  std::vector<OverlapFailure> overlaps;
  std::vector<AssociativityFailure> associativity;

  bool consistent() const { return overlaps.empty() && associativity.empty(); }
};

/// Diamond-lemma check. For every triple g1 >= g2 >= g3 the word g1 g2 g3 is
/// reduced by resolving (g1, g2) first and by resolving (g2, g3) first, and the
/// normal forms are compared. In addition every word of length 3..maxdeg is
/// normalized multiplying from the left and from the right (associativity).
PbwReport check_pbw_consistency(const HcAlgebra& alg, int maxdeg);

struct EquivarianceFailure {
  int k, l, i, j;
  NCElement defect;
};

/// Tests [E(k,l), c(i,j)] = delta_{li} c(k,j) - delta_{kj} c(i,l) for all indices,
/// which is the g-invariance of the pairing V x V* -> U(g).
std::vector<EquivarianceFailure> equivariance_failures(const HcAlgebra& alg);

/// j(c(i,j)) == c(j,i) for all i, j.
bool ctable_anti_involution_compatible(const HcAlgebra& alg);

}  // namespace icherednik
