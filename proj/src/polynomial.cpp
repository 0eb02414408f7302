#include "icherednik/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace icherednik {

std::string VarSpace::var_name(int index) const {
  auto idx = [](int v) { return std::to_string(v); };
  switch (kind) {
    case VarKind::Matrix:
      return "e(" + idx(index / rank + 1) + "," + idx(index % rank + 1) + ")";
    case VarKind::Eigen:
      return "lambda(" + idx(index + 1) + ")";
    case VarKind::LStar:
      if (index < rank * rank) return "e(" + idx(index / rank + 1) + "," + idx(index % rank + 1) + ")";
      if (index < rank * rank + rank) return "u(" + idx(index - rank * rank + 1) + ")";
      return "w(" + idx(index - rank * rank - rank + 1) + ")";
    case VarKind::Generic:
      break;
  }
  return "z(" + idx(index + 1) + ")";
}

std::vector<std::string> VarSpace::var_names() const {
  std::vector<std::string> out;
  out.reserve(count);
  for (int v = 0; v < count; ++v) out.push_back(var_name(v));
  return out;
}

Polynomial Polynomial::constant(VarSpace space, const Scalar& c) {
  Polynomial p(space, c.field());
  p.add_term(Exponents(space.count, 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSpace space, Field field, int var) {
  if (var < 0 || var >= space.count) throw std::out_of_range("variable index out of range");
  Exponents e(space.count, 0);
  e[var] = 1;
  return monomial(space, std::move(e), field.one());
}

Polynomial Polynomial::monomial(VarSpace space, Exponents exps, const Scalar& c) {
  if (static_cast<int>(exps.size()) != space.count) throw std::invalid_argument("exponent vector length mismatch");
  Polynomial p(space, c.field());
  p.add_term(exps, c);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(space_, field_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
  return out;
}

Scalar Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Scalar& c) {
  if (static_cast<int>(exps.size()) != space_.count) throw std::invalid_argument("exponent vector length mismatch");
  if (c.characteristic() != field_.p) throw DomainMismatch("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!(space_ == o.space_)) throw DomainMismatch("polynomial variable spaces differ");
  if (!(field_ == o.field_)) throw DomainMismatch("polynomial fields differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.space_, a.field_);
  Exponents e(a.space_.count);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.space_ == b.space_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(space_, field_.one());
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(space_, field_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * field_.make(e[var]));
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != space_.count) throw std::invalid_argument("evaluation point has wrong length");
  Scalar sum = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) term *= point[v].pow(e[v]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != space_.count) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) throw std::invalid_argument("substitution into a space without variables");
  const VarSpace target = images.front().space();
  // powers[v][k] = images[v]^k, built lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, int k) -> const Polynomial& {
    auto& row = powers[v];
    if (row.empty()) row.push_back(constant(target, field_.one()));
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * images[v]);
    return row[k];
  };
  Polynomial out(target, field_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::embed(VarSpace target) const {
  if (target.count < space_.count) throw std::invalid_argument("embedding into a smaller space");
  Polynomial out(target, field_);
  for (const auto& [e, c] : terms_) {
    Exponents big(target.count, 0);
    std::copy(e.begin(), e.end(), big.begin());
    out.terms_.emplace(std::move(big), c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponents first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.to_string();
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) coeff.erase(0, 1);
    bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (coeff != "1" || is_const) os << coeff << (is_const ? "" : "*");
    bool first_var = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (!first_var) os << "*";
      os << space_.var_name(static_cast<int>(v));
      if (e[v] > 1) os << "^" << e[v];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

bool is_symmetric(const Polynomial& p) {
  const int n = p.space().count;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (const auto& [e, c] : p.terms()) {
        Exponents swapped = e;
        std::swap(swapped[a], swapped[b]);
        if (!(p.coefficient(swapped) == c)) return false;
      }
    }
  }
  return true;
}

SymPoly::SymPoly(Polynomial p) : poly_(std::move(p)) {
  if (poly_.space().kind != VarKind::Eigen) throw std::invalid_argument("SymPoly needs eigenvalue variables");
  if (!is_symmetric(poly_)) throw NotSymmetric("polynomial is not symmetric: " + poly_.to_string());
}

}  // namespace icherednik
