#include "icherednik/nc_element.hpp"

namespace icherednik {

NCElement NCElement::scalar(const Scalar& c) {
  NCElement e(c.field());
  e.add_term({}, c);
  return e;
}

NCElement NCElement::monomial(Word w, const Scalar& c) {
  NCElement e(c.field());
  e.add_term(w, c);
  return e;
}

Scalar NCElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void NCElement::add_term(const Word& w, const Scalar& c) {
  if (c.characteristic() != field_.p) throw DomainMismatch("NCElement coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCElement::add_scaled(const NCElement& o, const Scalar& f) {
  require_same(o);
  if (f.is_zero()) return;
  for (const auto& [w, c] : o.terms_) add_term(w, f.is_one() ? c : c * f);
}

std::optional<int> NCElement::max_length() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return static_cast<int>(d);
}

NCElement NCElement::length_part(int length) const {
  NCElement out(field_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == length) out.terms_.emplace(w, c);
  return out;
}

void NCElement::require_same(const NCElement& o) const {
  if (!(field_ == o.field_)) throw DomainMismatch("NCElement characteristic mismatch");
}

NCElement& NCElement::operator+=(const NCElement& o) {
  require_same(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  require_same(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const Scalar& c) {
  if (c.characteristic() != field_.p) throw DomainMismatch("NCElement scalar field mismatch");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

}  // namespace icherednik
