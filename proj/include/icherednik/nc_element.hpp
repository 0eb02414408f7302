#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "icherednik/scalar.hpp"

namespace icherednik {

/// Index of a generator in the ordered alphabet of a rewriting algebra.
using Letter = std::uint8_t;
/// A word in the generators; a normal word is nondecreasing.
using Word = std::vector<Letter>;

inline bool is_nondecreasing(const Word& w) {
  for (std::size_t a = 1; a < w.size(); ++a)
    if (w[a - 1] > w[a]) return false;
  return true;
}

/// Finite linear combination of words with nonzero coefficients. Normality of
/// the words is maintained by the algebra that produced the element.
class NCElement {
 public:
  using TermMap = std::map<Word, Scalar>;

  explicit NCElement(Field field = {}) : field_(field) {}

  static NCElement scalar(const Scalar& c);
  static NCElement monomial(Word w, const Scalar& c);

  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);
  /// Adds f * o term by term.
  void add_scaled(const NCElement& o, const Scalar& f);

  /// Longest word length; nullopt for zero.
  std::optional<int> max_length() const;
  /// Terms whose word has exactly the given length.
  NCElement length_part(int length) const;
  /// Constant (empty-word) coefficient.
  Scalar constant_term() const { return coefficient({}); }

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const Scalar& c);
  NCElement operator-() const;
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const Scalar& c) { return a *= c; }
  friend NCElement operator*(const Scalar& c, NCElement a) { return a *= c; }
  friend bool operator==(const NCElement& a, const NCElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const NCElement& o) const;

  Field field_;
  TermMap terms_;
};

}  // namespace icherednik
