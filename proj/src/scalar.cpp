#include "icherednik/scalar.hpp"

#include <ostream>

namespace icherednik {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field::Field(std::uint32_t characteristic) : p(characteristic) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
  if (p > (1u << 31)) throw std::invalid_argument("characteristic too large");
}

Scalar Field::zero() const { return make(0); }
Scalar Field::one() const { return make(1); }

Scalar Field::make(long value) const {
  if (p == 0) return Scalar(mpq_class(value));
  return Scalar(reduce(mpz_class(value), p), p);
}

Scalar Field::make(long num, long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  return make(mpq_class(mpz_class(num), mpz_class(den)));
}

Scalar Field::make(const mpq_class& q) const {
  mpq_class c = q;
  c.canonicalize();
  if (p == 0) return Scalar(c);
  std::uint64_t d = reduce(c.get_den(), p);
  if (d == 0) throw std::domain_error("denominator not invertible in F_" + std::to_string(p));
  return Scalar(reduce(c.get_num(), p) * inv_mod(d, p) % p, p);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return make(q);
}

Scalar::Scalar(const mpq_class& q) : value_(q) { std::get<mpq_class>(value_).canonicalize(); }

Scalar::Scalar(std::uint64_t residue, std::uint32_t p) : value_(Residue{residue % p, p}) {}

Field Scalar::field() const {
  Field f;
  f.p = characteristic();
  return f;
}

std::uint32_t Scalar::characteristic() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->p;
  return 0;
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::logic_error("rational() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->r;
  throw std::logic_error("residue() on a rational scalar");
}

void Scalar::require_same(const Scalar& o) const {
  if (characteristic() != o.characteristic())
    throw DomainMismatch("scalar characteristic mismatch: " + std::to_string(characteristic()) +
                         " vs " + std::to_string(o.characteristic()));
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(r->r == 0 ? 0 : r->p - r->r, r->p);
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->r = (r->r + std::get<Residue>(o.value_).r) % r->p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->r = (r->r + r->p - std::get<Residue>(o.value_).r) % r->p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->r = r->r * std::get<Residue>(o.value_).r % r->p;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != b.characteristic()) return false;
  if (auto* r = std::get_if<Scalar::Residue>(&a.value_)) return r->r == std::get<Scalar::Residue>(b.value_).r;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

Scalar Scalar::inverse() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(inv_mod(r->r, r->p), r->p);
  const auto& q = std::get<mpq_class>(value_);
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  return Scalar(mpq_class(1) / q);
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->r);
  return std::get<mpq_class>(value_).get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace icherednik
