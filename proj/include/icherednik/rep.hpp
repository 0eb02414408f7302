#pragma once

// Highest-weight theory: Harish-Chandra evaluation on Z(Ug), truncated Verma
// modules of H_c, central characters and the block predicate.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icherednik/center.hpp"

namespace icherednik {

using Weight = std::vector<Scalar>;

class NotWeightZero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scalar of z in Ug on a highest-weight vector of weight lambda (no rho shift).
/// z must be free of Y/X letters and of torus weight zero.
Scalar hc_evaluate(const NCElement& z, const Weight& lambda, const HcAlgebra& alg);
/// The same as a polynomial in lambda(1..n).
Polynomial hc_polynomial(const NCElement& z, const HcAlgebra& alg);
/// rho_i = (n - 2i + 1) / 2.
Weight rho(int n, Field field = {});
/// hc_evaluate at lambda - rho.
Scalar hc_evaluate_shifted(const NCElement& z, const Weight& lambda, const HcAlgebra& alg);

class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of M(lambda): combination of normal words in the lowering E and the
/// Y letters, each standing for that word applied to v_lambda.
struct VermaVector {
  NCElement coeffs;

  bool is_zero() const { return coeffs.is_zero(); }
  /// s with *this == s v_lambda, if any.
  std::optional<Scalar> scalar_multiple() const;
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

/// M(lambda) truncated at word length `depth`; acting past the truncation
/// throws TruncationOverflow.
class VermaModule {
 public:
  VermaModule(const HcAlgebra& alg, Weight lambda, int depth);

  const HcAlgebra& algebra() const { return alg_; }
  const Weight& weight() const { return lambda_; }
  int depth() const { return depth_; }

  VermaVector highest() const;
  /// The word w (normal in lowering E and Y letters) applied to v_lambda.
  VermaVector basis_vector(const Word& w) const;
  VermaVector act(const NCElement& a, const VermaVector& v) const;
  VermaVector act_letter(Letter g, const VermaVector& v) const;

 private:
  bool is_free_letter(Letter g) const;
  const NCElement& act_on_word(Letter g, const Word& w) const;
  NCElement act_element_on_word(const NCElement& a, const Word& w) const;
  void check_depth(const NCElement& e) const;

  const HcAlgebra& alg_;
  Weight lambda_;
  int depth_;
  mutable std::map<std::pair<Letter, Word>, NCElement> memo_;
};

VermaVector verma_act(const NCElement& a, const VermaVector& v, const VermaModule& m);

class NonScalarAction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CentralCharacter {
  std::vector<Scalar> values;     ///< eta_i on v_lambda, from the Verma action
  std::vector<Scalar> hc_values;  ///< -hc_evaluate(c_i, lambda)
  bool consistent() const { return values == hc_values; }
  friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) { return a.values == b.values; }
};

/// Throws NonScalarAction if some eta_i does not act on v_lambda by a scalar.
CentralCharacter central_character(const Weight& lambda, const HcAlgebra& alg, const CentralSet& cset,
                                   int depth = 4);

bool same_block(const Weight& lambda, const Weight& mu, const HcAlgebra& alg, const CentralSet& cset);

struct Block {
  std::vector<Scalar> character;
  std::vector<Weight> weights;
};

/// Partition of the sample by central character, in order of first appearance.
std::vector<Block> block_partition(const std::vector<Weight>& sample, const HcAlgebra& alg, const CentralSet& cset);

struct FinitenessReport {
  bool skipped = false;  ///< undeformed or constant table
  std::vector<std::size_t> fiber_sizes;
  std::size_t max_fiber = 0;
  /// prod_i deg(chi_i), a bound on every finite fiber. Fibers count distinct weights.
  long bezout_bound = 0;
  std::vector<int> character_degrees;
  bool identity_witness = false;  ///< lambda_identity_check(n, m)
  bool passed() const { return skipped || (identity_witness && max_fiber <= static_cast<std::size_t>(bezout_bound)); }
};

FinitenessReport finiteness_probe(const HcAlgebra& alg, const CentralSet& cset, const std::vector<Weight>& sample);

}  // namespace icherednik
