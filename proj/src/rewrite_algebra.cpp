#include "icherednik/rewrite_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace icherednik {

RewriteAlgebra::RewriteAlgebra(Field field, std::vector<std::string> names, const BracketFn& bracket)
    : field_(field), names_(std::move(names)) {
  const int n = num_generators();
  if (n == 0 || n > 255) throw std::invalid_argument("RewriteAlgebra needs 1..255 generators");
  brackets_.assign(static_cast<std::size_t>(n) * n, NCElement(field_));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      NCElement br = bracket(static_cast<Letter>(a), static_cast<Letter>(b));
      if (!(br.field() == field_)) throw DomainMismatch("bracket has the wrong characteristic");
      for (const auto& [w, c] : br.terms()) {
        if (!is_nondecreasing(w)) throw std::invalid_argument("bracket [" + names_[a] + "," + names_[b] + "] is not normal");
        for (Letter l : w)
          if (l >= n) throw std::invalid_argument("bracket uses an unknown generator");
      }
      brackets_[static_cast<std::size_t>(a) * n + b] = std::move(br);
    }
  }
}

NCElement RewriteAlgebra::constant(const Scalar& c) const {
  NCElement e(field_);
  e.add_term({}, c);
  return e;
}

NCElement RewriteAlgebra::generator(Letter g) const {
  if (g >= num_generators()) throw std::out_of_range("generator index out of range");
  return NCElement::monomial({g}, field_.one());
}

const NCElement& RewriteAlgebra::bracket(Letter a, Letter b) const {
  if (a <= b || a >= num_generators()) throw std::out_of_range("bracket(a, b) needs a > b");
  return brackets_[static_cast<std::size_t>(a) * num_generators() + b];
}

void RewriteAlgebra::accumulate_word_letter(const Word& w, Letter g, const Scalar& coef, NCElement& out) const {
  if (w.empty() || w.back() <= g) {
    Word appended = w;
    appended.push_back(g);
    out.add_term(appended, coef);
    return;
  }
  out.add_scaled(word_letter_product(w, g), coef);
}

const NCElement& RewriteAlgebra::word_letter_product(const Word& w, Letter g) const {
  Word key = w;
  key.push_back(g);
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  // w = prefix a with a > g:  prefix a g = (prefix g) a + prefix [a, g]
  const Letter a = w.back();
  const Word prefix(w.begin(), w.end() - 1);
  NCElement result(field_);

  NCElement left(field_);
  accumulate_word_letter(prefix, g, field_.one(), left);
  for (const auto& [u, c] : left.terms()) accumulate_word_letter(u, a, c, result);

  for (const auto& [v, c] : bracket(a, g).terms()) {
    NCElement acc = NCElement::monomial(prefix, c);
    for (Letter l : v) acc = times_letter(acc, l);
    result += acc;
  }

  std::unique_lock lock(cache_mutex_);
  auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(result));
  return it->second;
}

NCElement RewriteAlgebra::times_letter(const NCElement& a, Letter g) const {
  NCElement out(field_);
  for (const auto& [w, c] : a.terms()) accumulate_word_letter(w, g, c, out);
  return out;
}

NCElement RewriteAlgebra::multiply(const NCElement& a, const NCElement& b) const {
  if (!(a.field() == field_) || !(b.field() == field_)) throw DomainMismatch("multiply: characteristic mismatch");
  NCElement out(field_);
  for (const auto& [v, cv] : b.terms()) {
    NCElement acc = a;
    for (Letter l : v) acc = times_letter(acc, l);
    out.add_scaled(acc, cv);
  }
  return out;
}

NCElement RewriteAlgebra::commutator(const NCElement& a, const NCElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

NCElement RewriteAlgebra::power(const NCElement& a, unsigned k) const {
  NCElement result = one();
  for (unsigned s = 0; s < k; ++s) result = multiply(result, a);
  return result;
}

NCElement RewriteAlgebra::normal_form(const Word& w) const {
  NCElement acc = one();
  for (Letter l : w) {
    if (l >= num_generators()) throw std::out_of_range("word uses an unknown generator");
    acc = times_letter(acc, l);
  }
  return acc;
}

NCElement RewriteAlgebra::normal_form_right(const Word& w) const {
  NCElement acc = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it >= num_generators()) throw std::out_of_range("word uses an unknown generator");
    acc = multiply(generator(*it), acc);
  }
  return acc;
}

NCElement RewriteAlgebra::rewrite_pair(Letter a, Letter b) const {
  if (a <= b) return NCElement::monomial({a, b}, field_.one());
  NCElement out = NCElement::monomial({b, a}, field_.one());
  out += bracket(a, b);
  return out;
}

std::vector<NCElement> RewriteAlgebra::commutators_with_generators(const NCElement& z) const {
  std::vector<NCElement> out;
  for (int g = 0; g < num_generators(); ++g) out.push_back(commutator(z, generator(static_cast<Letter>(g))));
  return out;
}

bool RewriteAlgebra::is_central(const NCElement& z) const {
  for (int g = 0; g < num_generators(); ++g)
    if (!commutator(z, generator(static_cast<Letter>(g))).is_zero()) return false;
  return true;
}

std::string RewriteAlgebra::word_to_string(const Word& w) const {
  std::string s;
  for (std::size_t a = 0; a < w.size();) {
    std::size_t b = a;
    while (b < w.size() && w[b] == w[a]) ++b;
    if (!s.empty()) s += "*";
    s += names_[w[a]];
    if (b - a > 1) s += "^" + std::to_string(b - a);
    a = b;
  }
  return s;
}

std::string RewriteAlgebra::to_string(const NCElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    std::string coeff = c.to_string();
    bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (w.empty()) os << coeff;
    else if (coeff == "1") os << word_to_string(w);
    else os << coeff << "*" << word_to_string(w);
    first = false;
  }
  return os.str();
}

std::size_t RewriteAlgebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

}  // namespace icherednik
