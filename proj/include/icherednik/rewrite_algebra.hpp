#pragma once

#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "icherednik/nc_element.hpp"

namespace icherednik {

/// An associative algebra presented by ordered generators g_0 < g_1 < ... and
/// commutation rules  g_a g_b = g_b g_a + [g_a, g_b]  for every a > b.
///
/// Normal words are the nondecreasing ones. Products are brought to normal
/// form by pushing each new right factor leftwards through the word (the
/// leftmost-innermost inversion is always resolved first). The rewriting
/// terminates when each bracket is smaller than the pair it replaces in a
/// compatible well-order; for the algebras built here that is the order by
/// (number of filtration-degree-1 letters, word length, inversions).
///
/// Whether the normal words form a basis (PBW) is not assumed; see
/// check_pbw_consistency in pbw.hpp.
///
/// Instances are immutable apart from a product cache, which is shared between
/// threads behind a reader/writer lock; cached values are never modified once
/// published.
class RewriteAlgebra {
 public:
  /// Returns [g_a, g_b] for a > b as a combination of normal words.
  using BracketFn = std::function<NCElement(Letter a, Letter b)>;

  RewriteAlgebra(Field field, std::vector<std::string> names, const BracketFn& bracket);

  RewriteAlgebra(const RewriteAlgebra&) = delete;
  RewriteAlgebra& operator=(const RewriteAlgebra&) = delete;

  Field field() const { return field_; }
  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  NCElement zero() const { return NCElement(field_); }
  NCElement one() const { return NCElement::scalar(field_.one()); }
  NCElement constant(const Scalar& c) const;
  NCElement generator(Letter g) const;

  /// The stored rule [g_a, g_b] for a > b.
  const NCElement& bracket(Letter a, Letter b) const;

  NCElement multiply(const NCElement& a, const NCElement& b) const;
  NCElement commutator(const NCElement& a, const NCElement& b) const;
  NCElement power(const NCElement& a, unsigned k) const;
  /// a * g_letter.
  NCElement times_letter(const NCElement& a, Letter g) const;

  /// Normal form of an arbitrary word, multiplying letters in from the left.
  NCElement normal_form(const Word& w) const;
  /// Normal form of an arbitrary word, multiplying letters in from the right.
  NCElement normal_form_right(const Word& w) const;
  /// Applies one rewrite to the pair (a, b) if a > b, then normalizes.
  NCElement rewrite_pair(Letter a, Letter b) const;

  /// Commutator of z with each generator, in generator order.
  std::vector<NCElement> commutators_with_generators(const NCElement& z) const;
  bool is_central(const NCElement& z) const;

  std::string to_string(const NCElement& a) const;
  std::string word_to_string(const Word& w) const;

  std::size_t cache_size() const;

 private:
  // out += coef * nf(w g) with w normal
  void accumulate_word_letter(const Word& w, Letter g, const Scalar& coef, NCElement& out) const;
  const NCElement& word_letter_product(const Word& w, Letter g) const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<NCElement> brackets_;  // index a * N + b, a > b

  mutable std::shared_mutex cache_mutex_;
  mutable std::map<Word, NCElement> cache_;  // key: normal word followed by the new letter
};

}  // namespace icherednik
